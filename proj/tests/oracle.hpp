#pragma once
// Independent reference implementations used only by tests.

#include <algorithm>
#include <array>
#include <cstdint>
#include <numeric>
#include <tuple>
#include <vector>

namespace oracle {

using Perm = std::vector<int>;

// The validity clauses written directly from the block bookkeeping.
inline bool valid_triple(int n, int kc, const Perm& f, const Perm& phi, const Perm& tau) {
  const int kp = n - 2 * kc;
  if (kc < 1 || kp < 0) return false;
  for (int i = 0; i < kc + kp; ++i)
    if (f[i] == phi[i]) return false;
  for (int i = 0; i < kp; ++i)
    if (tau[kc + i] == f[kc + i] || tau[kc + i] == phi[kc + i]) return false;
  for (int i = 0; i < kc; ++i)
    if (f[kc + kp + i] == tau[i]) return false;
  for (int i = 0; i < kc; ++i)
    if (phi[kc + kp + i] == tau[kc + kp + i]) return false;
  return true;
}

struct Triple {
  int kc;
  Perm f, phi, tau;
  bool operator<(const Triple& o) const {
    return std::tie(kc, f, phi, tau) < std::tie(o.kc, o.f, o.phi, o.tau);
  }
  bool operator==(const Triple& o) const { return kc == o.kc && f == o.f && phi == o.phi && tau == o.tau; }
};

inline std::vector<Perm> all_perms(int n) {
  std::vector<Perm> out;
  Perm p(n);
  std::iota(p.begin(), p.end(), 0);
  do out.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  return out;
}

// Every valid triple, sorted. fix_f restricts f to the identity.
inline std::vector<Triple> brute_force(int n, bool fix_f) {
  std::vector<Triple> out;
  const auto perms = all_perms(n);
  for (int kc = 1; 2 * kc <= n; ++kc)
    for (const auto& f : perms) {
      if (fix_f && f != perms.front()) continue;
      for (const auto& phi : perms)
        for (const auto& tau : perms)
          if (valid_triple(n, kc, f, phi, tau)) out.push_back({kc, f, phi, tau});
    }
  std::sort(out.begin(), out.end());
  return out;
}

// Heisenberg group as upper unitriangular integer matrices.
using Mat = std::array<std::array<std::int64_t, 3>, 3>;

inline Mat mat_mul(const Mat& x, const Mat& y) {
  Mat r{};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k) r[i][j] += x[i][k] * y[k][j];
  return r;
}

inline Mat heis(std::int64_t x, std::int64_t y, std::int64_t z) { return Mat{{{1, x, z}, {0, 1, y}, {0, 0, 1}}}; }

// Modular inverse through Fermat's little theorem.
inline std::uint64_t pow_mod(std::uint64_t b, std::uint64_t e, std::uint64_t p) {
  unsigned __int128 r = 1, x = b % p;
  for (; e; e >>= 1, x = x * x % p)
    if (e & 1) r = r * x % p;
  return static_cast<std::uint64_t>(r);
}

}  // namespace oracle
