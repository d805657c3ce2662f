#include "albert/jordan.hpp"

#include <algorithm>
#include <map>
#include <tuple>

#include "albert/deg3.hpp"

namespace albert {

CubicJordanModel::CubicJordanModel(std::string name, GroundField k, int dim, JordanElement unit,
                                   std::vector<CubicTerm> norm,
                                   std::vector<std::vector<QuadTerm>> sharp)
    : name_(std::move(name)),
      field_(k),
      dim_(dim),
      unit_(std::move(unit)),
      norm_(std::move(norm)),
      sharp_(std::move(sharp)) {
  if (static_cast<int>(unit_.size()) != dim_) throw ModelMismatch("unit has wrong dimension");
  if (static_cast<int>(sharp_.size()) != dim_) throw ModelMismatch("sharp table has wrong size");
  for (auto& t : norm_) {
    int idx[3] = {t.i, t.j, t.k};
    std::sort(idx, idx + 3);
    t.i = idx[0], t.j = idx[1], t.k = idx[2];
  }
  for (auto& row : sharp_)
    for (auto& t : row)
      if (t.i > t.j) std::swap(t.i, t.j);
  build_polar();
}

void CubicJordanModel::build_polar() {
  std::map<std::tuple<int, int, int>, Scalar> acc;
  auto add = [&](int a, int b, int l, const Scalar& c) {
    if (a > b) std::swap(a, b);
    auto [it, inserted] = acc.try_emplace({a, b, l}, c);
    if (!inserted) it->second += c;
  };
  for (const auto& t : norm_) {
    add(t.j, t.k, t.i, t.c);
    add(t.i, t.k, t.j, t.c);
    add(t.i, t.j, t.k, t.c);
  }
  polar_.clear();
  for (const auto& [key, c] : acc) {
    if (c.is_zero()) continue;
    polar_.push_back({std::get<0>(key), std::get<1>(key), std::get<2>(key), c});
  }
}

CubicJordanModel CubicJordanModel::from_closed_form(std::string name, GroundField k, int dim,
                                                    JordanElement unit, const NormFn& norm,
                                                    const SharpFn& sharp) {
  JordanElement probe = JordanElement::zeros(k, dim);
  auto eval_at = [&](std::initializer_list<std::pair<int, std::int64_t>> entries) {
    for (const auto& [idx, v] : entries) probe[idx] = k.from_int(v);
    Scalar value = norm(probe);
    for (const auto& [idx, v] : entries) probe[idx] = k.zero();
    return value;
  };

  std::vector<CubicTerm> terms;
  std::vector<Scalar> single(dim);
  for (int i = 0; i < dim; ++i) {
    single[i] = eval_at({{i, 1}});
    if (!single[i].is_zero()) terms.push_back({i, i, i, single[i]});
  }
  // A_ij = c_iij + c_ijj; B_ij = c_ijj - c_iij.
  const Scalar half = k.from_int(2).inverse();
  std::vector<Scalar> pair_sum(dim * dim, k.zero());
  for (int i = 0; i < dim; ++i)
    for (int j = i + 1; j < dim; ++j) {
      const Scalar a = eval_at({{i, 1}, {j, 1}}) - single[i] - single[j];
      const Scalar b = eval_at({{i, 1}, {j, -1}}) - single[i] + single[j];
      pair_sum[i * dim + j] = a;
      const Scalar c_ijj = (a + b) * half;
      const Scalar c_iij = (a - b) * half;
      if (!c_iij.is_zero()) terms.push_back({i, i, j, c_iij});
      if (!c_ijj.is_zero()) terms.push_back({i, j, j, c_ijj});
    }
  for (int i = 0; i < dim; ++i)
    for (int j = i + 1; j < dim; ++j)
      for (int l = j + 1; l < dim; ++l) {
        const Scalar c = eval_at({{i, 1}, {j, 1}, {l, 1}}) - single[i] - single[j] - single[l] -
                         pair_sum[i * dim + j] - pair_sum[i * dim + l] - pair_sum[j * dim + l];
        if (!c.is_zero()) terms.push_back({i, j, l, c});
      }

  std::vector<std::vector<QuadTerm>> sharp_terms(dim);
  std::vector<JordanElement> sharp_single(dim);
  for (int i = 0; i < dim; ++i) {
    probe[i] = k.one();
    sharp_single[i] = sharp(probe);
    probe[i] = k.zero();
    for (int m = 0; m < dim; ++m)
      if (!sharp_single[i][m].is_zero()) sharp_terms[m].push_back({i, i, sharp_single[i][m]});
  }
  for (int i = 0; i < dim; ++i)
    for (int j = i + 1; j < dim; ++j) {
      probe[i] = k.one();
      probe[j] = k.one();
      const JordanElement s = sharp(probe) - sharp_single[i] - sharp_single[j];
      probe[i] = k.zero();
      probe[j] = k.zero();
      for (int m = 0; m < dim; ++m)
        if (!s[m].is_zero()) sharp_terms[m].push_back({i, j, s[m]});
    }

  return CubicJordanModel(std::move(name), k, dim, std::move(unit), std::move(terms),
                          std::move(sharp_terms));
}

CubicJordanModel CubicJordanModel::with_sharp_perturbation(int output, int i, int j,
                                                           const Scalar& delta) const {
  if (output < 0 || output >= dim_ || i < 0 || j < 0 || i >= dim_ || j >= dim_)
    throw InvalidArgument("sharp perturbation index out of range");
  if (i > j) std::swap(i, j);
  auto sharp = sharp_;
  auto& row = sharp[output];
  auto it = std::find_if(row.begin(), row.end(), [&](const QuadTerm& t) { return t.i == i && t.j == j; });
  if (it == row.end())
    row.push_back({i, j, delta});
  else
    it->c += delta;
  return CubicJordanModel(name_ + " [sharp(" + std::to_string(output) + ";" + std::to_string(i) +
                              "," + std::to_string(j) + ")+=" + delta.to_string() + "]",
                          field_, dim_, unit_, norm_, std::move(sharp));
}

void CubicJordanModel::check(const JordanElement& x) const {
  if (static_cast<int>(x.size()) != dim_)
    throw ModelMismatch("element of dimension " + std::to_string(x.size()) + " used in " + name_);
}

JordanElement CubicJordanModel::basis(int i) const {
  JordanElement e = zero();
  e[i] = field_.one();
  return e;
}

JordanElement CubicJordanModel::random(Rng& rng) const {
  JordanElement x = zero();
  for (auto& c : x.coords) c = field_.random(rng);
  return x;
}

JordanElement CubicJordanModel::random_invertible(Rng& rng) const {
  for (;;) {
    JordanElement x = random(rng);
    if (is_invertible(x)) return x;
  }
}

Scalar CubicJordanModel::norm(const JordanElement& x) const {
  check(x);
  Scalar acc = field_.zero();
  for (const auto& t : norm_) acc += t.c * x[t.i] * x[t.j] * x[t.k];
  return acc;
}

Scalar CubicJordanModel::dnorm(const JordanElement& x, const JordanElement& y) const {
  check(x);
  check(y);
  Scalar acc = field_.zero();
  for (const auto& t : polar_) acc += t.c * x[t.i] * x[t.j] * y[t.l];
  return acc;
}

JordanElement CubicJordanModel::sharp(const JordanElement& x) const {
  check(x);
  JordanElement r = zero();
  for (int m = 0; m < dim_; ++m) {
    Scalar acc = field_.zero();
    for (const auto& t : sharp_[m]) acc += t.c * x[t.i] * x[t.j];
    r[m] = std::move(acc);
  }
  return r;
}

JordanElement CubicJordanModel::cross(const JordanElement& x, const JordanElement& y) const {
  check(x);
  check(y);
  JordanElement r = zero();
  for (int m = 0; m < dim_; ++m) {
    Scalar acc = field_.zero();
    for (const auto& t : sharp_[m]) acc += t.c * (x[t.i] * y[t.j] + x[t.j] * y[t.i]);
    r[m] = std::move(acc);
  }
  return r;
}

Scalar CubicJordanModel::trace(const JordanElement& x) const { return dnorm(unit_, x); }

Scalar CubicJordanModel::norm_1xy(const JordanElement& x, const JordanElement& y) const {
  return dnorm(unit_ + x, y) - dnorm(unit_, y) - dnorm(x, y);
}

Scalar CubicJordanModel::trace_form(const JordanElement& x, const JordanElement& y) const {
  return trace(x) * trace(y) - norm_1xy(x, y);
}

TraceForms CubicJordanModel::trace_forms(const JordanElement& x, const JordanElement& y) const {
  return {trace(x), trace_form(x, y)};
}

JordanElement CubicJordanModel::u_op(const JordanElement& x, const JordanElement& y) const {
  return trace_form(x, y) * x - cross(sharp(x), y);
}

LinearMap CubicJordanModel::u_matrix(const JordanElement& x) const {
  check(x);
  const JordanElement xs = sharp(x);
  const Scalar tx = trace(x);
  std::vector<JordanElement> columns;
  columns.reserve(dim_);
  for (int j = 0; j < dim_; ++j) {
    const JordanElement e = basis(j);
    const Scalar t = tx * trace(e) - norm_1xy(x, e);
    columns.push_back(t * x - cross(xs, e));
  }
  return LinearMap::from_columns(field_, dim_, columns);
}

JordanElement CubicJordanModel::triple(const JordanElement& x, const JordanElement& y,
                                       const JordanElement& z) const {
  return u_op(x + z, y) - u_op(x, y) - u_op(z, y);
}

JordanElement CubicJordanModel::inverse(const JordanElement& x) const {
  const Scalar n = norm(x);
  if (n.is_zero()) throw NotInvertible("element has zero norm");
  return n.inverse() * sharp(x);
}

GenericMinPoly CubicJordanModel::generic_min_poly(const JordanElement& x) const {
  Scalar c2 = trace(x);
  Scalar c1 = trace(sharp(x));
  Scalar c0 = norm(x);
  Scalar disc = cubic_discriminant({-c0, c1, -c2});
  const bool etale = !disc.is_zero();
  return {std::move(c2), std::move(c1), std::move(c0), std::move(disc), etale};
}

JordanElement CubicJordanModel::min_poly_residual(const JordanElement& x) const {
  const auto m = generic_min_poly(x);
  return cube(x) - m.c2 * square(x) + m.c1 * x - m.c0 * unit_;
}

}  // namespace albert
