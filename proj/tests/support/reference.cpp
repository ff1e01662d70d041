#include "reference.hpp"

#include <cmath>
#include <functional>

#include <boost/math/distributions/chi_squared.hpp>
#include <boost/math/quadrature/gauss.hpp>
#include <boost/multiprecision/cpp_int.hpp>
#include <unsupported/Eigen/MatrixFunctions>

namespace ref {

double hook_product(const std::vector<int>& parts) {
  std::vector<int> conj;
  for (int row = 0; row < static_cast<int>(parts.size()); ++row) {
    for (int c = 0; c < parts[row]; ++c) {
      if (c >= static_cast<int>(conj.size())) conj.push_back(0);
      ++conj[c];
    }
  }
  double h = 1.0;
  for (int row = 0; row < static_cast<int>(parts.size()); ++row) {
    for (int c = 0; c < parts[row]; ++c) h *= (parts[row] - c - 1) + (conj[c] - row - 1) + 1;
  }
  return h;
}

double schur_bialternant(const std::vector<int>& parts, const std::vector<double>& z) {
  const int n = static_cast<int>(z.size());
  using MatL = Eigen::Matrix<long double, Eigen::Dynamic, Eigen::Dynamic>;
  MatL num(n, n), den(n, n);
  int weight = 0;
  for (int j = 0; j < n; ++j) {
    const int mj = j < static_cast<int>(parts.size()) ? parts[j] : 0;
    weight += mj;
    for (int i = 0; i < n; ++i) {
      num(i, j) = std::pow(static_cast<long double>(z[i]), mj + n - 1 - j);
      den(i, j) = std::pow(static_cast<long double>(z[i]), n - 1 - j);
    }
  }
  const long double s = num.determinant() / den.determinant();
  return static_cast<double>(std::tgamma(weight + 1.0) / hook_product(parts) * s);
}

double scalar_hyp1f1(double a, double b, double x, int H) {
  double term = 1.0;
  double sum = 1.0;
  for (int j = 0; j < H; ++j) {
    term *= (a + j) / (b + j) * x / (j + 1);
    sum += term;
  }
  return sum;
}

double simplex_integral(const std::vector<double>& z) {
  using Gauss = boost::math::quadrature::gauss<double, 30>;
  const int n = static_cast<int>(z.size());
  // x_1 = u_1, x_j = u_j prod_{i<j} (1 - u_i); Jacobian prod_j (1 - u_j)^{n-j}.
  std::function<double(int, double, double)> level = [&](int j, double remaining,
                                                         double exponent) -> double {
    if (j == n) return std::exp(exponent);
    return Gauss::integrate(
        [&](double u) {
          const double x = remaining * u;
          return remaining * level(j + 1, remaining - x, exponent + z[j] * x);
        },
        0.0, 1.0);
  };
  return std::tgamma(n + 1.0) * level(0, 1.0, 0.0);
}

double krawtchouk_exact(int l, int x, int N, int p_num, int p_den) {
  using boost::multiprecision::cpp_rational;
  auto binom = [](int n, int k) -> cpp_rational {
    if (k < 0 || k > n) return 0;
    cpp_rational r = 1;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
  };
  const cpp_rational ratio(p_den - p_num, p_num);  // q / p
  cpp_rational sum = 0;
  cpp_rational power = 1;
  for (int k = 0; k <= N; ++k) {
    const cpp_rational term = binom(N - x, l - k) * binom(x, k) * power;
    sum += (k % 2 == 0) ? term : cpp_rational(-term);
    power *= ratio;
  }
  return static_cast<double>(sum / binom(N, l));
}

Eigen::MatrixXd generator(const ehrenfest::process::EhrenfestParams& params) {
  const int N = params.N();
  Eigen::MatrixXd Q = Eigen::MatrixXd::Zero(N + 1, N + 1);
  for (int i = 0; i <= N; ++i) {
    const double up = (N - i) * params.lambda() * params.alpha();
    const double down = i * params.lambda() * params.beta();
    if (i < N) Q(i, i + 1) = up;
    if (i > 0) Q(i, i - 1) = down;
    Q(i, i) = -(up + down);
  }
  return Q;
}

Eigen::MatrixXd expm(const Eigen::MatrixXd& A, double t) {
  const Eigen::MatrixXd At = A * t;
  return At.exp();
}

Eigen::Matrix2d expm_2x2(const Eigen::Matrix2d& A) {
  const double tr = A.trace();
  const double det = A.determinant();
  const double disc = tr * tr / 4.0 - det;
  const Eigen::Matrix2d I = Eigen::Matrix2d::Identity();
  const double m = tr / 2.0;
  if (std::abs(disc) < 1e-300) return std::exp(m) * (I + (A - m * I));
  if (disc > 0) {
    const double s = std::sqrt(disc);
    return std::exp(m) * (std::cosh(s) * I + std::sinh(s) / s * (A - m * I));
  }
  const double s = std::sqrt(-disc);
  return std::exp(m) * (std::cos(s) * I + std::sin(s) / s * (A - m * I));
}

double chi_square_p_value(const std::vector<double>& observed, const std::vector<double>& probs) {
  double total = 0.0;
  for (double o : observed) total += o;
  std::vector<double> obs_cells, exp_cells;
  double o_acc = 0.0, e_acc = 0.0;
  for (std::size_t i = 0; i < probs.size(); ++i) {
    o_acc += observed[i];
    e_acc += probs[i] * total;
    if (e_acc >= 5.0) {
      obs_cells.push_back(o_acc);
      exp_cells.push_back(e_acc);
      o_acc = e_acc = 0.0;
    }
  }
  if (!exp_cells.empty()) {
    obs_cells.back() += o_acc;
    exp_cells.back() += e_acc;
  }
  if (exp_cells.size() < 2) return 1.0;
  double stat = 0.0;
  for (std::size_t i = 0; i < exp_cells.size(); ++i) {
    const double d = obs_cells[i] - exp_cells[i];
    stat += d * d / exp_cells[i];
  }
  boost::math::chi_squared dist(static_cast<double>(exp_cells.size() - 1));
  return boost::math::cdf(boost::math::complement(dist, stat));
}

}  // namespace ref
