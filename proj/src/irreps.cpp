#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <complex>
#include <random>
#include <stdexcept>

#include "dgq/representations.hpp"

namespace dgq {

std::vector<std::vector<Id>> conjugacy_classes(const Groupoid& group) {
  if (!is_group(group)) throw std::invalid_argument("conjugacy_classes: not a group");
  const Id n = group.num_arrows();
  std::vector<bool> seen(n, false);
  std::vector<std::vector<Id>> out;
  for (Id g = 0; g < n; ++g) {
    if (seen[g]) continue;
    std::vector<Id> cls;
    for (Id h = 0; h < n; ++h) {
      const Id c = group.compose(group.compose(group.inverse(h), g), h);
      if (!seen[c]) {
        seen[c] = true;
        cls.push_back(c);
      }
    }
    std::sort(cls.begin(), cls.end());
    out.push_back(std::move(cls));
  }
  return out;
}

namespace {

// Cluster sizes of the spectrum, or empty if they are not all squares adding up to n.
std::vector<Id> read_dims(std::vector<double> ev, Id n, std::size_t expected) {
  std::sort(ev.begin(), ev.end());
  double scale = 1.0;
  for (double x : ev) scale = std::max(scale, std::abs(x));
  const double tol = 1e-6 * scale;
  std::vector<Id> sizes;
  for (std::size_t i = 0; i < ev.size();) {
    std::size_t j = i + 1;
    while (j < ev.size() && ev[j] - ev[j - 1] < tol) ++j;
    sizes.push_back(static_cast<Id>(j - i));
    i = j;
  }
  if (sizes.size() != expected) return {};
  std::vector<Id> dims;
  Id total = 0;
  for (Id s : sizes) {
    const Id d = static_cast<Id>(std::lround(std::sqrt(static_cast<double>(s))));
    if (d * d != s) return {};
    dims.push_back(d);
    total += s;
  }
  if (total != n) return {};
  std::sort(dims.begin(), dims.end());
  return dims;
}

}  // namespace

std::vector<Id> irreducible_dims(const Groupoid& group, std::uint64_t seed) {
  const auto classes = conjugacy_classes(group);
  const Id n = group.num_arrows();
  if (classes.size() == static_cast<std::size_t>(n)) return std::vector<Id>(n, 1);

  // Left regular representation: e_h -> e_{gh}.
  auto class_sum = [&](const std::vector<double>& coeff) {
    Eigen::MatrixXd m = Eigen::MatrixXd::Zero(n, n);
    for (std::size_t c = 0; c < classes.size(); ++c)
      for (Id g : classes[c])
        for (Id h = 0; h < n; ++h) m(group.compose(g, h), h) += coeff[c];
    return m;
  };
  for (int attempt = 0; attempt < 32; ++attempt) {
    std::mt19937_64 rng(seed * 1000003ULL + static_cast<std::uint64_t>(attempt));
    std::uniform_real_distribution<double> unif(-1.0, 1.0);
    std::vector<double> r(classes.size()), s(classes.size());
    for (auto& x : r) x = unif(rng);
    for (auto& x : s) x = unif(rng);
    const Eigen::MatrixXd z = class_sum(r), y = class_sum(s);
    // Hermitian, central, and separates complex conjugate characters through the imaginary part.
    Eigen::MatrixXcd h(n, n);
    h.real() = z + z.transpose();
    h.imag() = y - y.transpose();
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(h, Eigen::EigenvaluesOnly);
    if (solver.info() != Eigen::Success) continue;
    const Eigen::VectorXd ev = solver.eigenvalues();
    auto dims = read_dims(std::vector<double>(ev.data(), ev.data() + ev.size()), n, classes.size());
    if (!dims.empty()) return dims;
  }
  throw std::runtime_error("irreducible_dims: no consistent eigenvalue clustering after 32 attempts");
}

}  // namespace dgq
