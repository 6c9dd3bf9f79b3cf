#include "kempner/moebius.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "kempner/prime_table.hpp"
#include "kempner/scales.hpp"

namespace kempner {

namespace {

// S of a prime-power part with one exponent lowered by 1; s1 when the part
// was the whole of n and vanishes.
u64 part_value(u64 p, u64 alpha) { return sp_formula(p, alpha); }

}  // namespace

i64 s_inversion(const FactoredNat& n, SmarandacheCtx ctx) {
  const auto& parts = n.parts();
  std::size_t t = parts.size();
  if (t > 62) throw std::invalid_argument("s_inversion: too many prime factors");
  i64 total = 0;
  for (u64 mask = 0; mask < (u64{1} << t); ++mask) {
    // d = product of the selected primes; S(n/d) over the lowered exponents
    u64 best = 0;
    bool nontrivial = false;
    for (std::size_t i = 0; i < t; ++i) {
      u64 alpha = parts[i].exp - ((mask >> i) & 1);
      if (alpha == 0) continue;
      nontrivial = true;
      best = std::max(best, part_value(parts[i].prime, alpha));
    }
    u64 s = nontrivial ? best : static_cast<u64>(ctx.s1);
    int sign = __builtin_popcountll(mask) % 2 == 0 ? 1 : -1;
    total += sign * static_cast<i64>(s);
  }
  return total;
}

ChainTrace s_closed(const FactoredNat& n, SmarandacheCtx ctx) {
  if (n.is_one()) throw std::domain_error("s_closed undefined at n = 1");
  const auto& parts = n.parts();
  std::size_t t = parts.size();

  std::vector<u64> vals(t);
  for (std::size_t i = 0; i < t; ++i)
    vals[i] = part_value(parts[i].prime, parts[i].exp);

  // lexicographic (value, prime) max; ties on value go to the larger prime
  auto better = [&](std::size_t a, std::size_t b) {
    if (vals[a] != vals[b]) return vals[a] > vals[b];
    return parts[a].prime > parts[b].prime;
  };

  std::vector<bool> used(t, false);
  ChainTrace trace;

  std::optional<std::size_t> pick;
  for (std::size_t i = 0; i < t; ++i)
    if (!pick || better(i, *pick)) pick = i;
  used[*pick] = true;
  trace.chain.push_back(parts[*pick]);

  for (;;) {
    const PrimePower& last = trace.chain.back();
    u64 threshold = last.exp >= 2 ? part_value(last.prime, last.exp - 1)
                                  : static_cast<u64>(ctx.s1);
    std::optional<std::size_t> next;
    for (std::size_t i = 0; i < t; ++i) {
      if (used[i] || vals[i] <= threshold) continue;
      if (!next || better(i, *next)) next = i;
    }
    if (!next) break;
    used[*next] = true;
    trace.chain.push_back(parts[*next]);
  }

  std::size_t k = trace.chain.size();
  if (t >= k + 1) {
    trace.terminal = ChainTerminal::TooManyPrimes;
    trace.value = 0;
    return trace;
  }
  const PrimePower& end = trace.chain.back();
  i64 drop = static_cast<i64>(digit_sum(end.exp - 1, end.prime, ScaleKind::GENERALIZED)) -
             static_cast<i64>(digit_sum(end.exp, end.prime, ScaleKind::GENERALIZED));
  if (drop == static_cast<i64>(end.prime) - 1) {
    trace.terminal = ChainTerminal::DigitDrop;
    trace.value = 0;
    return trace;
  }
  trace.terminal = ChainTerminal::Nonzero;
  trace.value = (k % 2 == 0 ? -1 : 1) * static_cast<i64>(end.prime);
  return trace;
}

u64 summatory_FS(const FactoredNat& n, SmarandacheCtx ctx) {
  const auto& parts = n.parts();
  std::size_t t = parts.size();
  std::vector<u32> exps(t, 0);
  u64 total = 0;
  for (;;) {
    u64 best = 0;
    bool nontrivial = false;
    for (std::size_t i = 0; i < t; ++i) {
      if (exps[i] == 0) continue;
      nontrivial = true;
      best = std::max(best, part_value(parts[i].prime, exps[i]));
    }
    total = checked_add(total, nontrivial ? best : static_cast<u64>(ctx.s1));

    std::size_t i = 0;
    while (i < t && exps[i] == parts[i].exp) exps[i++] = 0;
    if (i == t) break;
    ++exps[i];
  }
  return total;
}

namespace {

BigInt bareiss_det(std::vector<std::vector<BigInt>> a) {
  std::size_t n = a.size();
  if (n == 0) return 1;
  BigInt prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k] == 0) {
      std::size_t swap_row = k + 1;
      while (swap_row < n && a[swap_row][k] == 0) ++swap_row;
      if (swap_row == n) return 0;
      std::swap(a[k], a[swap_row]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j)
        a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
    prev = a[k][k];
  }
  return sign * a[n - 1][n - 1];
}

BigInt gcd_det_impl(u64 shift, u64 r, SmarandacheCtx ctx) {
  if (r == 0) throw std::invalid_argument("determinant order must be >= 1");
  std::vector<std::vector<BigInt>> m(r, std::vector<BigInt>(r));
  for (u64 i = 1; i <= r; ++i)
    for (u64 j = 1; j <= r; ++j)
      m[i - 1][j - 1] = smarandache_u64(std::gcd(shift + i, shift + j), ctx);
  return bareiss_det(std::move(m));
}

}  // namespace

BigInt gcd_matrix_det(u64 r, SmarandacheCtx ctx) {
  return gcd_det_impl(0, r, ctx);
}

BigInt shifted_det(u64 n, u64 r, SmarandacheCtx ctx) {
  return gcd_det_impl(n, r, ctx);
}

std::optional<u64> find_vanishing_r(u64 n, u64 r_max, SmarandacheCtx ctx) {
  for (u64 r = 1; r <= r_max; ++r)
    if (shifted_det(n, r, ctx) == 0) return r;
  return std::nullopt;
}

std::vector<ErrataRecord> audit_s_closed(u64 n_max, SmarandacheCtx ctx) {
  std::vector<ErrataRecord> out;
  SpfSieve sieve(n_max);
  for (u64 n = 2; n <= n_max; ++n) {
    auto pairs = sieve.factor_pairs(n);
    std::vector<PrimePower> parts;
    parts.reserve(pairs.size());
    for (auto [p, e] : pairs) parts.push_back({p, e});
    FactoredNat fn = FactoredNat::from_parts(std::move(parts));
    i64 closed = s_closed(fn, ctx).value;
    i64 inv = s_inversion(fn, ctx);
    if (closed != inv) out.push_back({n, closed, inv});
  }
  return out;
}

}  // namespace kempner
