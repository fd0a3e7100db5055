#include "covariant/covariant_space.hpp"

#include <cmath>
#include <string>

#include "covariant/errors.hpp"
#include "covariant/linalg.hpp"

namespace covariant {

GroupFunction::GroupFunction(GroupPtr group, Eigen::VectorXcd values)
    : group_(std::move(group)), values_(std::move(values)) {
  if (static_cast<std::size_t>(values_.size()) != group_->order()) {
    throw DomainMismatch("function has " + std::to_string(values_.size()) + " values on a group of order " +
                         std::to_string(group_->order()));
  }
  if (!values_.allFinite()) throw DomainMismatch("function values must be finite");
}

GroupFunction GroupFunction::zero(GroupPtr group) {
  const auto n = static_cast<Eigen::Index>(group->order());
  return {std::move(group), Eigen::VectorXcd::Zero(n)};
}

GroupFunction GroupFunction::delta(GroupPtr group, Element x) {
  group->require_element(x);
  Eigen::VectorXcd v = Eigen::VectorXcd::Zero(static_cast<Eigen::Index>(group->order()));
  v(x) = 1.0;
  return {std::move(group), std::move(v)};
}

GroupFunction GroupFunction::constant(GroupPtr group, std::complex<double> c) {
  const auto n = static_cast<Eigen::Index>(group->order());
  return {std::move(group), Eigen::VectorXcd::Constant(n, c)};
}

GroupFunction GroupFunction::operator+(const GroupFunction& other) const {
  require_same_group(*this, other);
  return {group_, values_ + other.values_};
}

GroupFunction GroupFunction::operator-(const GroupFunction& other) const {
  require_same_group(*this, other);
  return {group_, values_ - other.values_};
}

GroupFunction GroupFunction::operator*(std::complex<double> c) const { return {group_, values_ * c}; }

void require_same_group(const GroupFunction& f, const GroupFunction& g) {
  if (f.group_ptr() != g.group_ptr() && !(f.group() == g.group())) {
    throw DomainMismatch("functions live on different groups (" + f.group().name() + ", " + g.group().name() + ")");
  }
}

GroupFunction translate(const GroupFunction& f, Side side, Element y) {
  const FiniteGroup& g = f.group();
  g.require_element(y, "translation");
  Eigen::VectorXcd out(f.values().size());
  const Element y_inv = g.inverse(y);
  for (Element z = 0; z < g.order(); ++z) {
    out(z) = side == Side::left ? f(g.product(y_inv, z)) : f(g.product(z, y));
  }
  return {f.group_ptr(), std::move(out)};
}

double l1_norm(const GroupFunction& f, const HaarData& haar) { return haar.u() * f.values().cwiseAbs().sum(); }

std::complex<double> pairing(const GroupFunction& f, const GroupFunction& g, const HaarData& haar) {
  require_same_group(f, g);
  // adjoint().dot conjugates its first argument.
  return haar.u() * g.values().dot(f.values());
}

// ---------------------------------------------------------------------------

double covariance_residual(const GroupFunction& psi, const Character& xi) {
  const FiniteGroup& g = psi.group();
  const Subgroup& n = xi.domain();
  if (&n.group() != &g && !(n.group() == g)) throw DomainMismatch("character and function live on different groups");
  double worst = 0.0;
  const auto members = n.members();
  for (Element x = 0; x < g.order(); ++x) {
    for (std::size_t i = 0; i < members.size(); ++i) {
      worst = std::max(worst, std::abs(psi(g.product(x, members[i])) - xi.value_at(i) * psi(x)));
    }
  }
  return worst;
}

CovariantFunction::CovariantFunction(GroupFunction underlying, Character xi)
    : underlying_(std::move(underlying)), xi_(std::move(xi)), residual_(covariant::covariance_residual(underlying_, xi_)) {
  if (residual_ > kCovarianceTolerance) {
    throw NotCovariant("function violates psi(xk) = xi(k) psi(x); residual " + std::to_string(residual_));
  }
  const FiniteGroup& g = underlying_.group();
  for (Element x = 0; x < g.order(); ++x) {
    for (Element s : xi_.domain().members()) {
      if (std::abs(std::abs(underlying_(g.product(x, s))) - std::abs(underlying_(x))) > kCovarianceTolerance) {
        throw NotCovariant("|psi| is not constant on the coset of element " + std::to_string(x));
      }
    }
  }
}

// ---------------------------------------------------------------------------

SubspaceBasis::SubspaceBasis(GroupPtr group, Eigen::MatrixXcd euclidean_orthonormal, double u)
    : group_(std::move(group)), basis_(std::move(euclidean_orthonormal)), u_(u) {
  if (static_cast<std::size_t>(basis_.rows()) != group_->order()) {
    throw DomainMismatch("basis vectors have the wrong length for " + group_->name());
  }
}

GroupFunction SubspaceBasis::vector(std::size_t i) const {
  return {group_, basis_.col(static_cast<Eigen::Index>(i)) / std::sqrt(u_)};
}

std::vector<GroupFunction> SubspaceBasis::vectors() const {
  std::vector<GroupFunction> out;
  out.reserve(dimension());
  for (std::size_t i = 0; i < dimension(); ++i) out.push_back(vector(i));
  return out;
}

double SubspaceBasis::gram_residual() const {
  if (dimension() == 0) return 0.0;
  const Eigen::MatrixXcd scaled = basis_ / std::sqrt(u_);
  const Eigen::MatrixXcd gram = u_ * (scaled.adjoint() * scaled);
  return (gram - Eigen::MatrixXcd::Identity(basis_.cols(), basis_.cols())).cwiseAbs().maxCoeff();
}

double SubspaceBasis::distance(const GroupFunction& f) const {
  Eigen::VectorXcd r = f.values();
  if (dimension() > 0) r -= basis_ * (basis_.adjoint() * r);
  return r.norm();
}

double subspace_match_residual(const SubspaceBasis& a, const SubspaceBasis& b) {
  if (a.euclidean().rows() != b.euclidean().rows()) throw DomainMismatch("subspaces of different groups");
  return linalg::match_residual(a.euclidean(), b.euclidean());
}

// ---------------------------------------------------------------------------

CovariantSpace::CovariantSpace(Character xi, HaarData haar)
    : xi_(std::move(xi)), haar_(haar), cosets_(coset_decomposition(xi_.domain())) {
  conj_xi_.reserve(xi_.domain().size());
  for (std::size_t i = 0; i < xi_.domain().size(); ++i) conj_xi_.push_back(std::conj(xi_.value_at(i)));
}

void CovariantSpace::require_domain(const GroupFunction& f) const {
  if (f.group_ptr() != group_ptr() && !(f.group() == group())) {
    throw DomainMismatch("function on " + f.group().name() + " used with a character of a subgroup of " +
                         group().name());
  }
}

GroupFunction CovariantSpace::apply(const GroupFunction& f) const {
  require_domain(f);
  const FiniteGroup& g = group();
  const auto members = subgroup().members();
  Eigen::VectorXcd out(static_cast<Eigen::Index>(g.order()));
  for (Element x = 0; x < g.order(); ++x) {
    std::complex<double> acc = 0.0;
    for (std::size_t i = 0; i < members.size(); ++i) acc += f(g.product(x, members[i])) * conj_xi_[i];
    out(x) = haar_.v() * acc;
  }
  return {group_ptr(), std::move(out)};
}

CovariantFunction CovariantSpace::t_xi(const GroupFunction& f) const { return {apply(f), xi_}; }

Eigen::VectorXcd CovariantSpace::t_n(const GroupFunction& f) const {
  require_domain(f);
  const FiniteGroup& g = group();
  Eigen::VectorXcd out(static_cast<Eigen::Index>(cosets_.coset_count()));
  for (std::size_t c = 0; c < cosets_.coset_count(); ++c) {
    std::complex<double> acc = 0.0;
    for (Element s : subgroup().members()) acc += f(g.product(cosets_.representatives[c], s));
    out(static_cast<Eigen::Index>(c)) = haar_.v() * acc;
  }
  return out;
}

double CovariantSpace::norm_one(const CovariantFunction& psi) const {
  require_domain(psi.underlying());
  if (!(psi.character() == xi_)) throw DomainMismatch("covariant function belongs to a different character");
  double total = 0.0;
  for (Element rep : cosets_.representatives) total += std::abs(psi(rep));
  return haar_.w() * total;
}

CovariantFunction CovariantSpace::make_covariant(GroupFunction psi) const {
  require_domain(psi);
  return {std::move(psi), xi_};
}

CovariantFunction CovariantSpace::extend_from_representatives(std::span<const std::complex<double>> values) const {
  if (values.size() != cosets_.coset_count()) {
    throw DomainMismatch("expected one value per coset (" + std::to_string(cosets_.coset_count()) + "), got " +
                         std::to_string(values.size()));
  }
  const FiniteGroup& g = group();
  const auto members = subgroup().members();
  Eigen::VectorXcd out(static_cast<Eigen::Index>(g.order()));
  for (std::size_t c = 0; c < values.size(); ++c) {
    for (std::size_t i = 0; i < members.size(); ++i) {
      out(g.product(cosets_.representatives[c], members[i])) = xi_.value_at(i) * values[c];
    }
  }
  return {GroupFunction(group_ptr(), std::move(out)), xi_};
}

GroupFunction CovariantSpace::minimal_lift(const CovariantFunction& psi) const {
  require_domain(psi.underlying());
  Eigen::VectorXcd out = Eigen::VectorXcd::Zero(static_cast<Eigen::Index>(group().order()));
  for (Element rep : cosets_.representatives) out(rep) = psi(rep) / haar_.v();
  return {group_ptr(), std::move(out)};
}

double CovariantSpace::quotient_norm(const GroupFunction& f) const { return norm_one(t_xi(f)); }

Eigen::MatrixXcd CovariantSpace::operator_matrix() const {
  const FiniteGroup& g = group();
  const auto n = static_cast<Eigen::Index>(g.order());
  const auto members = subgroup().members();
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(n, n);
  for (Element x = 0; x < g.order(); ++x) {
    for (std::size_t i = 0; i < members.size(); ++i) m(x, g.product(x, members[i])) += haar_.v() * conj_xi_[i];
  }
  return m;
}

Eigen::MatrixXcd CovariantSpace::representative_matrix() const {
  const FiniteGroup& g = group();
  const auto members = subgroup().members();
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(static_cast<Eigen::Index>(cosets_.coset_count()),
                                              static_cast<Eigen::Index>(g.order()));
  for (std::size_t c = 0; c < cosets_.coset_count(); ++c) {
    for (std::size_t i = 0; i < members.size(); ++i) {
      m(static_cast<Eigen::Index>(c), g.product(cosets_.representatives[c], members[i])) += haar_.v() * conj_xi_[i];
    }
  }
  return m;
}

SubspaceBasis CovariantSpace::kernel_basis() const {
  return {group_ptr(), linalg::null_space(representative_matrix()), haar_.u()};
}

SubspaceBasis CovariantSpace::closed_kernel_basis() const {
  return {group_ptr(), linalg::null_space(operator_matrix()), haar_.u()};
}

TranslateSpan CovariantSpace::span_translates_basis() const {
  const FiniteGroup& g = group();
  const auto members = subgroup().members();
  const auto n = static_cast<Eigen::Index>(g.order());
  Eigen::MatrixXcd generators = Eigen::MatrixXcd::Zero(n, n * static_cast<Eigen::Index>(members.size()));
  Eigen::Index col = 0;
  for (std::size_t i = 0; i < members.size(); ++i) {
    const Element k = members[i];
    const double delta_n = subgroup_modular_function(subgroup(), haar_, g.inverse(k));
    const std::complex<double> factor = delta_n * xi_.value_at(i);
    for (Element x = 0; x < g.order(); ++x, ++col) {
      // R_k delta_x = delta_{x k^-1}
      generators(g.product(x, g.inverse(k)), col) += 1.0;
      generators(x, col) -= factor;
    }
  }
  const Eigen::MatrixXcd images = operator_matrix() * generators;
  const double containment = images.size() == 0 ? 0.0 : images.cwiseAbs().maxCoeff();

  SubspaceBasis span(group_ptr(), linalg::column_space(generators), haar_.u());
  const double match = subspace_match_residual(span, kernel_basis());
  return {std::move(span), containment, match, match <= kCovarianceTolerance};
}

SubspaceBasis CovariantSpace::linfty_xi_basis() const {
  const FiniteGroup& g = group();
  const auto members = subgroup().members();
  const auto n = static_cast<Eigen::Index>(g.order());
  Eigen::MatrixXcd constraints = Eigen::MatrixXcd::Zero(n * static_cast<Eigen::Index>(members.size()), n);
  Eigen::Index row = 0;
  for (std::size_t i = 0; i < members.size(); ++i) {
    for (Element z = 0; z < g.order(); ++z, ++row) {
      constraints(row, g.product(z, members[i])) += 1.0;
      constraints(row, z) -= xi_.value_at(i);
    }
  }
  return {group_ptr(), linalg::null_space(constraints), haar_.u()};
}

SubspaceBasis CovariantSpace::annihilator_basis(const SubspaceBasis& kernel) const {
  if (kernel.euclidean().rows() != static_cast<Eigen::Index>(group().order())) {
    throw DomainMismatch("kernel basis belongs to a different group");
  }
  // <f, g> = u f^T conj(g) vanishes iff f^H g does.
  return {group_ptr(), linalg::null_space(kernel.euclidean().adjoint()), haar_.u()};
}

// ---------------------------------------------------------------------------

CovariantFunction t_xi(const GroupFunction& f, const Character& xi, const HaarData& haar) {
  return CovariantSpace(xi, haar).t_xi(f);
}

Eigen::VectorXcd t_n(const GroupFunction& f, const Subgroup& n, const HaarData& haar) {
  return CovariantSpace(Character::trivial(n), haar).t_n(f);
}

}  // namespace covariant
