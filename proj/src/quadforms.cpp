#include "albert/quadforms.hpp"

namespace albert {

QuadraticForm::QuadraticForm(LinearMap gram) : gram_(std::move(gram)) {
  if (gram_.rows() != gram_.cols()) throw InvalidArgument("Gram matrix must be square");
  for (std::size_t i = 0; i < gram_.rows(); ++i)
    for (std::size_t j = i + 1; j < gram_.rows(); ++j)
      if (!(gram_.at(i, j) == gram_.at(j, i)))
        throw InvalidArgument("Gram matrix must be symmetric");
}

QuadraticForm QuadraticForm::diagonal(const GroundField& k, const std::vector<Scalar>& entries) {
  LinearMap g(k, entries.size(), entries.size());
  for (std::size_t i = 0; i < entries.size(); ++i) g.at(i, i) = entries[i];
  return QuadraticForm(std::move(g));
}

QuadraticForm QuadraticForm::hyperbolic(const GroundField& k) {
  LinearMap g(k, 2, 2);
  g.at(0, 1) = k.one();
  g.at(1, 0) = k.one();
  return QuadraticForm(std::move(g));
}

Scalar QuadraticForm::value(const JordanElement& x) const { return bilinear(x, x); }

Scalar QuadraticForm::bilinear(const JordanElement& x, const JordanElement& y) const {
  const JordanElement gy = gram_.apply(y);
  Scalar acc = field().zero();
  for (std::size_t i = 0; i < x.size(); ++i) acc += x[i] * gy[i];
  return acc;
}

QuadraticForm QuadraticForm::transformed(const LinearMap& p) const {
  return QuadraticForm(p.transpose() * gram_ * p);
}

QuadraticForm QuadraticForm::restricted(const std::vector<JordanElement>& basis) const {
  if (basis.empty()) return QuadraticForm(LinearMap(field(), 0, 0));
  return transformed(LinearMap::from_columns(field(), dim(), basis));
}

QuadraticForm QuadraticForm::orthogonal_sum(const QuadraticForm& other) const {
  const std::size_t n = dim(), m = other.dim();
  LinearMap g(field(), n + m, n + m);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) g.at(i, j) = gram_.at(i, j);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) g.at(n + i, n + j) = other.gram_.at(i, j);
  return QuadraticForm(std::move(g));
}

Diagonalization diagonalize(const QuadraticForm& q) {
  const GroundField& k = q.field();
  const std::size_t n = q.dim();
  LinearMap p = LinearMap::identity(k, n);
  LinearMap g = q.gram();

  auto swap_cols = [&](std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t r = 0; r < n; ++r) std::swap(p.at(r, a), p.at(r, b));
  };
  auto add_col = [&](std::size_t dst, std::size_t src, const Scalar& c) {
    for (std::size_t r = 0; r < n; ++r) p.at(r, dst) += c * p.at(r, src);
  };

  for (std::size_t i = 0; i < n; ++i) {
    std::size_t pivot = n;
    for (std::size_t j = i; j < n && pivot == n; ++j)
      if (!g.at(j, j).is_zero()) pivot = j;
    if (pivot == n) {
      // All remaining diagonal entries vanish; e_j + e_l has value 2 g_jl.
      for (std::size_t j = i; j < n && pivot == n; ++j)
        for (std::size_t l = j + 1; l < n && pivot == n; ++l)
          if (!g.at(j, l).is_zero()) {
            add_col(j, l, k.one());
            pivot = j;
          }
      if (pivot == n) break;  // the rest is radical
    }
    swap_cols(i, pivot);
    g = p.transpose() * q.gram() * p;
    const Scalar inv = g.at(i, i).inverse();
    for (std::size_t l = i + 1; l < n; ++l)
      if (!g.at(i, l).is_zero()) add_col(l, i, -(g.at(i, l) * inv));
    g = p.transpose() * q.gram() * p;
  }

  Diagonalization out{{}, p};
  for (std::size_t i = 0; i < n; ++i) out.diagonal.push_back(g.at(i, i));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (i != j && !g.at(i, j).is_zero())
        throw std::logic_error("diagonalize: congruence replay failed");
  return out;
}

json WittInvariants::to_json() const {
  return {{"rank", std::to_string(rank)},
          {"disc", disc.to_string()},
          {"witt_index", std::to_string(witt_index)}};
}

namespace {

void require_finite(const QuadraticForm& q) {
  if (!q.field().is_finite())
    throw InvalidArgument("Witt invariants and isotropy search need a finite field");
}

std::optional<JordanElement> verified(const QuadraticForm& q, JordanElement v) {
  if (v.is_zero() || !q.value(v).is_zero())
    throw std::logic_error("isotropic_vector: candidate failed verification");
  return v;
}

}  // namespace

std::optional<JordanElement> isotropic_vector(const QuadraticForm& q, Rng& rng) {
  require_finite(q);
  const GroundField& k = q.field();
  const std::size_t n = q.dim();
  if (n == 0) return std::nullopt;
  for (std::size_t i = 0; i < n; ++i)
    if (q.gram().at(i, i).is_zero()) {
      JordanElement e = JordanElement::zeros(k, n);
      e[i] = k.one();
      return verified(q, std::move(e));
    }

  const Diagonalization d = diagonalize(q);
  auto lift = [&](const std::vector<std::pair<std::size_t, Scalar>>& coords) {
    JordanElement c = JordanElement::zeros(k, n);
    for (const auto& [i, v] : coords) c[i] = v;
    return d.basis.apply(c);
  };
  for (std::size_t i = 0; i < n; ++i)
    if (d.diagonal[i].is_zero()) return verified(q, lift({{i, k.one()}}));
  if (n == 1) return std::nullopt;

  const Scalar& a = d.diagonal[0];
  const Scalar& b = d.diagonal[1];
  if (n == 2) {
    // a x^2 + b = 0 has a solution iff -b/a is a square.
    const auto x = sqrt(-b / a, rng);
    if (!x) return std::nullopt;
    return verified(q, lift({{0, *x}, {1, k.one()}}));
  }

  // Ternary conic a x^2 + b y^2 + c z^2 = 0 on the first three diagonal
  // directions: pick (y, z) at random until -(b y^2 + c z^2)/a is a square.
  // About half of all pairs work, so the bound is never reached in practice.
  const Scalar& c = d.diagonal[2];
  for (int attempt = 0; attempt < 512; ++attempt) {
    const Scalar y = k.random(rng), z = k.random(rng);
    if (y.is_zero() && z.is_zero()) continue;
    const auto x = sqrt(-(b * y * y + c * z * z) / a, rng);
    if (!x) continue;
    return verified(q, lift({{0, *x}, {1, y}, {2, z}}));
  }
  throw SearchExhausted("no isotropic vector found on the ternary conic after 512 attempts");
}

std::optional<JordanElement> isotropic_vector(const QuadraticForm& q, std::uint64_t seed) {
  Rng rng(seed);
  return isotropic_vector(q, rng);
}

WittInvariants witt_invariants(const QuadraticForm& q, std::uint64_t seed) {
  require_finite(q);
  const GroundField& k = q.field();
  const Diagonalization d = diagonalize(q);
  WittInvariants out;
  Scalar prod = k.one();
  std::vector<Scalar> regular;
  for (const auto& x : d.diagonal)
    if (!x.is_zero()) {
      ++out.rank;
      prod *= x;
      regular.push_back(x);
    }
  out.disc = square_class(prod);

  // Split off hyperbolic planes one at a time from the nondegenerate part.
  Rng rng(seed);
  QuadraticForm cur = QuadraticForm::diagonal(k, regular);
  while (cur.dim() >= 2) {
    const auto v = isotropic_vector(cur, rng);
    if (!v) break;
    // cur is nondegenerate, so some coordinate pairs v with a dual vector w.
    const JordanElement gv = cur.gram().apply(*v);
    std::size_t j = 0;
    while (gv[j].is_zero()) ++j;
    JordanElement w = JordanElement::zeros(k, cur.dim());
    w[j] = gv[j].inverse();
    const JordanElement gw = cur.gram().apply(w);
    const auto perp =
        LinearMap::from_rows(k, cur.dim(), {gv, gw}).kernel_basis();
    ++out.witt_index;
    const QuadraticForm rest = cur.restricted(perp);
    std::vector<Scalar> next;
    for (const auto& x : diagonalize(rest).diagonal) next.push_back(x);
    cur = QuadraticForm::diagonal(k, next);
  }
  return out;
}

}  // namespace albert
