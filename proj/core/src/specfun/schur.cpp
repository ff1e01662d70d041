#include "ehrenfest/specfun/schur.hpp"

#include "ehrenfest/specfun/combinatorics.hpp"

namespace ehrenfest::specfun {

SchurEvaluator::SchurEvaluator(std::vector<double> z) : z_(std::move(z)), powers_(z_.size()) {
  for (auto& p : powers_) p.assign(1, 1.0);
}

double SchurEvaluator::schur(const Partition& m) {
  if (m.length() > z_.size()) return 0.0;
  const std::vector<int> parts(m.parts().begin(), m.parts().end());
  return eval(parts, z_.size());
}

double SchurEvaluator::normalized(const Partition& m) {
  if (m.empty()) return 1.0;
  const double s = schur(m);
  if (s == 0.0) return 0.0;
  return factorial(m.weight()) / hook_product(m) * s;
}

double SchurEvaluator::eval(const std::vector<int>& parts, std::size_t k) {
  if (parts.empty()) return 1.0;
  if (parts.size() > k) return 0.0;

  auto key = std::make_pair(parts, k);
  if (auto it = memo_.find(key); it != memo_.end()) return it->second;

  double acc = 0.0;
  const double zk = z_[k - 1];
  if (zk == 0.0) {
    // Only the empty strip survives.
    acc = parts.size() <= k - 1 ? eval(parts, k - 1) : 0.0;
  } else {
    std::vector<int> mu;
    mu.reserve(parts.size());
    strips(parts, 0, mu, k, acc);
  }
  memo_.emplace(std::move(key), acc);
  return acc;
}

// Enumerates mu with parts[i+1] <= mu[i] <= parts[i] and at most k-1 parts.
void SchurEvaluator::strips(const std::vector<int>& parts, std::size_t row, std::vector<int>& mu,
                            std::size_t k, double& acc) {
  if (row == parts.size()) {
    std::vector<int> canon = mu;
    while (!canon.empty() && canon.back() == 0) canon.pop_back();
    if (canon.size() > k - 1) return;
    int removed = 0;
    for (std::size_t i = 0; i < parts.size(); ++i) removed += parts[i] - mu[i];
    auto& pw = powers_[k - 1];
    while (static_cast<int>(pw.size()) <= removed) pw.push_back(pw.back() * z_[k - 1]);
    const double inner = eval(canon, k - 1);
    if (inner != 0.0) acc += inner * pw[removed];
    return;
  }
  const int lo = row + 1 < parts.size() ? parts[row + 1] : 0;
  for (int v = parts[row]; v >= lo; --v) {
    mu.push_back(v);
    strips(parts, row + 1, mu, k, acc);
    mu.pop_back();
  }
}

double schur_normalized(const Partition& m, std::span<const double> z) {
  SchurEvaluator ev(std::vector<double>(z.begin(), z.end()));
  return ev.normalized(m);
}

}  // namespace ehrenfest::specfun
