#include "algebra.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>

#include "numeric.hpp"
#include "spectral.hpp"

namespace ccvms::algebra {

namespace {

void require_same_shape(const Element& a, const Element& b, const char* op) {
  if (!(a.descriptor() == b.descriptor()))
    throw ShapeError(std::string(op) + ": operands live in " +
                     a.descriptor().label() + " and " + b.descriptor().label());
}

double min_value(const std::vector<double>& v) {
  return *std::min_element(v.begin(), v.end());
}

double max_value(const std::vector<double>& v) {
  return *std::max_element(v.begin(), v.end());
}

double max_abs(const std::vector<double>& v) {
  double best = 0.0;
  for (double x : v) best = std::max(best, std::abs(x));
  return best;
}

double max_asymmetry(const std::vector<double>& v, int n) {
  double worst = 0.0;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      worst = std::max(worst, std::abs(v[i * n + j] - v[j * n + i]));
  return worst;
}

}  // namespace

std::string kind_name(Kind kind) {
  switch (kind) {
    case Kind::MatEntrywise: return "mat-entrywise";
    case Kind::MatLoewner: return "mat-loewner";
    case Kind::Tuple: return "tuple";
    case Kind::StepFn: return "stepfn";
  }
  return "unknown";
}

Descriptor Descriptor::mat_entrywise(int n, double tol) {
  if (n < 1) throw ContractError("mat-entrywise: dimension must be positive");
  return Descriptor{Kind::MatEntrywise, n, tol};
}

Descriptor Descriptor::mat_loewner(int n, double tol) {
  if (n < 1) throw ContractError("mat-loewner: dimension must be positive");
  return Descriptor{Kind::MatLoewner, n, tol};
}

Descriptor Descriptor::tuple(int n, double tol) {
  if (n < 1) throw ContractError("tuple: dimension must be positive");
  return Descriptor{Kind::Tuple, n, tol};
}

Descriptor Descriptor::step_fn(int pieces, double tol) {
  if (pieces < 1) throw ContractError("stepfn: piece count must be positive");
  return Descriptor{Kind::StepFn, pieces, tol};
}

std::size_t Descriptor::value_count() const {
  const std::size_t n = static_cast<std::size_t>(dim);
  return is_matrix() ? n * n : n;
}

std::string Descriptor::label() const {
  return kind_name(kind) + "(" + std::to_string(dim) + ")";
}

Element::Element(Descriptor desc, std::vector<double> values)
    : desc_(desc), values_(std::move(values)) {
  if (values_.size() != desc_.value_count())
    throw ShapeError("element: " + desc_.label() + " needs " +
                     std::to_string(desc_.value_count()) + " values, got " +
                     std::to_string(values_.size()));
  for (double x : values_)
    if (!std::isfinite(x))
      throw ContractError("element: values must be finite");
}

double Element::entry(int row, int col) const {
  if (!desc_.is_matrix())
    throw ContractError("entry: " + desc_.label() + " is not a matrix kind");
  if (row < 0 || row >= desc_.dim || col < 0 || col >= desc_.dim)
    throw ContractError("entry: index out of range");
  return values_[static_cast<std::size_t>(row) * desc_.dim + col];
}

double Element::component(int index) const {
  if (index < 0 || static_cast<std::size_t>(index) >= values_.size())
    throw ContractError("component: index out of range");
  return values_[static_cast<std::size_t>(index)];
}

std::string Element::describe() const {
  std::string out;
  if (desc_.is_matrix()) {
    out += "[";
    for (int i = 0; i < desc_.dim; ++i) {
      out += "[";
      for (int j = 0; j < desc_.dim; ++j) {
        out += numeric::num_to_string(entry(i, j));
        if (j + 1 < desc_.dim) out += ", ";
      }
      out += "]";
      if (i + 1 < desc_.dim) out += ", ";
    }
    out += "]";
  } else {
    out += "[";
    for (std::size_t i = 0; i < values_.size(); ++i) {
      out += numeric::num_to_string(values_[i]);
      if (i + 1 < values_.size()) out += ", ";
    }
    out += "]";
  }
  return out;
}

Element zero(const Descriptor& desc) {
  return Element(desc, std::vector<double>(desc.value_count(), 0.0));
}

Element unit(const Descriptor& desc) {
  std::vector<double> v(desc.value_count(), 0.0);
  if (desc.is_matrix()) {
    for (int i = 0; i < desc.dim; ++i)
      v[static_cast<std::size_t>(i) * desc.dim + i] = 1.0;
  } else {
    std::fill(v.begin(), v.end(), 1.0);
  }
  return Element(desc, std::move(v));
}

Element scalar(const Descriptor& desc, double value) {
  return scale(value, unit(desc));
}

Element diagonal(const Descriptor& desc, std::span<const double> entries) {
  if (static_cast<int>(entries.size()) != desc.dim)
    throw ShapeError("diagonal: " + desc.label() + " needs " +
                     std::to_string(desc.dim) + " entries");
  if (!desc.is_matrix()) return Element(desc, {entries.begin(), entries.end()});
  std::vector<double> v(desc.value_count(), 0.0);
  for (int i = 0; i < desc.dim; ++i)
    v[static_cast<std::size_t>(i) * desc.dim + i] = entries[i];
  return Element(desc, std::move(v));
}

Element add(const Element& a, const Element& b) {
  require_same_shape(a, b, "add");
  std::vector<double> v(a.values());
  for (std::size_t i = 0; i < v.size(); ++i) v[i] += b.values()[i];
  return Element(a.descriptor(), std::move(v));
}

Element sub(const Element& a, const Element& b) {
  require_same_shape(a, b, "sub");
  std::vector<double> v(a.values());
  for (std::size_t i = 0; i < v.size(); ++i) v[i] -= b.values()[i];
  return Element(a.descriptor(), std::move(v));
}

Element mul(const Element& a, const Element& b) {
  require_same_shape(a, b, "mul");
  const Descriptor& desc = a.descriptor();
  if (!desc.is_matrix()) {
    std::vector<double> v(a.values());
    for (std::size_t i = 0; i < v.size(); ++i) v[i] *= b.values()[i];
    return Element(desc, std::move(v));
  }
  const int n = desc.dim;
  std::vector<double> v(desc.value_count(), 0.0);
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k) {
      const double aik = a.values()[static_cast<std::size_t>(i) * n + k];
      if (aik == 0.0) continue;
      for (int j = 0; j < n; ++j)
        v[static_cast<std::size_t>(i) * n + j] +=
            aik * b.values()[static_cast<std::size_t>(k) * n + j];
    }
  return Element(desc, std::move(v));
}

Element scale(double factor, const Element& a) {
  if (!std::isfinite(factor))
    throw ContractError("scale: factor must be finite");
  std::vector<double> v(a.values());
  for (double& x : v) x *= factor;
  return Element(a.descriptor(), std::move(v));
}

Element involution(const Element& a) {
  const Descriptor& desc = a.descriptor();
  if (!desc.is_matrix()) return a;  // real-valued functions are self-adjoint
  const int n = desc.dim;
  std::vector<double> v(desc.value_count());
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      v[static_cast<std::size_t>(j) * n + i] =
          a.values()[static_cast<std::size_t>(i) * n + j];
  return Element(desc, std::move(v));
}

Element conjugate(const Element& a, const Element& x) {
  return mul(mul(involution(a), x), a);
}

Element invert(const Element& a) {
  const Descriptor& desc = a.descriptor();
  if (!desc.is_matrix()) {
    std::vector<double> v(a.values());
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (std::abs(v[i]) < 1e-300)
        throw SingularityError("invert: component " + std::to_string(i) +
                               " is zero");
      v[i] = 1.0 / v[i];
    }
    return Element(desc, std::move(v));
  }

  // Gauss-Jordan with partial pivoting on [a | I]
  const int n = desc.dim;
  std::vector<double> m(a.values());
  std::vector<double> inv(unit(desc).values());
  const double floor = 1e-12 * std::max(1.0, max_abs(m));
  for (int col = 0; col < n; ++col) {
    int pivot = col;
    for (int r = col + 1; r < n; ++r)
      if (std::abs(m[static_cast<std::size_t>(r) * n + col]) >
          std::abs(m[static_cast<std::size_t>(pivot) * n + col]))
        pivot = r;
    const double p = m[static_cast<std::size_t>(pivot) * n + col];
    if (std::abs(p) <= floor)
      throw SingularityError("invert: pivot " + std::to_string(col) +
                             " of " + a.describe() + " vanishes");
    if (pivot != col)
      for (int j = 0; j < n; ++j) {
        std::swap(m[static_cast<std::size_t>(pivot) * n + j],
                  m[static_cast<std::size_t>(col) * n + j]);
        std::swap(inv[static_cast<std::size_t>(pivot) * n + j],
                  inv[static_cast<std::size_t>(col) * n + j]);
      }
    const double scale_by = 1.0 / m[static_cast<std::size_t>(col) * n + col];
    for (int j = 0; j < n; ++j) {
      m[static_cast<std::size_t>(col) * n + j] *= scale_by;
      inv[static_cast<std::size_t>(col) * n + j] *= scale_by;
    }
    for (int r = 0; r < n; ++r) {
      if (r == col) continue;
      const double f = m[static_cast<std::size_t>(r) * n + col];
      if (f == 0.0) continue;
      for (int j = 0; j < n; ++j) {
        m[static_cast<std::size_t>(r) * n + j] -=
            f * m[static_cast<std::size_t>(col) * n + j];
        inv[static_cast<std::size_t>(r) * n + j] -=
            f * inv[static_cast<std::size_t>(col) * n + j];
      }
    }
  }
  return Element(desc, std::move(inv));
}

double norm(const Element& a) {
  switch (a.descriptor().kind) {
    case Kind::MatLoewner:
      return spectral::spectral_norm(a.values(), a.dim());
    case Kind::MatEntrywise:
    case Kind::Tuple:
    case Kind::StepFn:
      return max_abs(a.values());
  }
  return 0.0;
}

bool is_positive(const Element& a, double tol) {
  switch (a.descriptor().kind) {
    case Kind::MatLoewner:
      return spectral::loewner_positive(a.values(), a.dim(), tol);
    case Kind::MatEntrywise:
    case Kind::Tuple:
    case Kind::StepFn:
      return min_value(a.values()) >= -tol;
  }
  return false;
}

bool approx_equal(const Element& a, const Element& b, double tol) {
  if (!(a.descriptor() == b.descriptor())) return false;
  for (std::size_t i = 0; i < a.values().size(); ++i)
    if (std::abs(a.values()[i] - b.values()[i]) > tol) return false;
  return true;
}

bool commutes(const Element& a, const Element& b, double tol) {
  require_same_shape(a, b, "commutes");
  return norm(sub(mul(a, b), mul(b, a))) <= tol;
}

std::string relation_name(Relation rel) {
  switch (rel) {
    case Relation::Less: return "less";
    case Relation::Equal: return "equal";
    case Relation::Greater: return "greater";
    case Relation::Incomparable: return "incomparable";
  }
  return "unknown";
}

OrderVerdict compare(const Element& a, const Element& b, double tol) {
  require_same_shape(a, b, "compare");
  const Element diff = sub(b, a);
  const Descriptor& desc = a.descriptor();

  double lo = 0.0;
  double hi = 0.0;
  if (desc.kind == Kind::MatLoewner) {
    const double asym = max_asymmetry(diff.values(), desc.dim);
    if (asym > tol) return OrderVerdict{Relation::Incomparable, -asym};
    std::vector<double> sym(diff.values());
    const int n = desc.dim;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) {
        const double avg = 0.5 * (sym[static_cast<std::size_t>(i) * n + j] +
                                  sym[static_cast<std::size_t>(j) * n + i]);
        sym[static_cast<std::size_t>(i) * n + j] = avg;
        sym[static_cast<std::size_t>(j) * n + i] = avg;
      }
    const auto spec = spectral::symmetric_eigenvalues(sym, n, 1e-12);
    lo = spec.eigenvalues.front();
    hi = spec.eigenvalues.back();
  } else {
    lo = min_value(diff.values());
    hi = max_value(diff.values());
  }

  const bool forward = lo >= -tol;   // a <= b
  const bool backward = hi <= tol;   // b <= a
  Relation rel = Relation::Incomparable;
  if (forward && backward)
    rel = Relation::Equal;
  else if (forward)
    rel = Relation::Less;
  else if (backward)
    rel = Relation::Greater;
  return OrderVerdict{rel, lo};
}

}  // namespace ccvms::algebra
