#pragma once

#include <optional>
#include <vector>

#include "kempner/factored.hpp"
#include "kempner/smarandache.hpp"

namespace kempner {

/// Moebius inverse of S: sum of mu(d) * S(n/d) over divisors d of n.
/// Ground truth for the chain classifier below.
i64 s_inversion(const FactoredNat& n, SmarandacheCtx ctx = {});

enum class ChainTerminal {
  TooManyPrimes,  // n has more prime factors than the chain absorbed
  DigitDrop,      // generalized digit sum drops by p-1 at the chain end
  Nonzero,
};

/// Maximal chain for the closed-form classifier of s(n): the first element
/// attains S(n); each successive element has the largest part value among
/// those exceeding S(p_prev^(a_prev - 1)). Ties on part value go to the
/// larger prime.
struct ChainTrace {
  std::vector<PrimePower> chain;
  ChainTerminal terminal = ChainTerminal::Nonzero;
  i64 value = 0;
};

/// Chain classifier for s(n), implemented exactly as the closed-form
/// construction prescribes and audited against s_inversion; the two are
/// known to disagree on some composite n (n = 12 is the smallest).
ChainTrace s_closed(const FactoredNat& n, SmarandacheCtx ctx = {});

/// Summatory function: sum of S(d) over divisors d of n.
u64 summatory_FS(const FactoredNat& n, SmarandacheCtx ctx = {});

/// Exact determinant of the r x r matrix [S(gcd(i, j))], by fraction-free
/// elimination; equals the product s(1)*...*s(r).
BigInt gcd_matrix_det(u64 r, SmarandacheCtx ctx = {});

/// Exact determinant of [S(gcd(n+i, n+j))], i, j = 1..r.
BigInt shifted_det(u64 n, u64 r, SmarandacheCtx ctx = {});

/// Smallest r <= r_max with shifted_det(n, r) = 0, if any.
std::optional<u64> find_vanishing_r(u64 n, u64 r_max, SmarandacheCtx ctx = {});

struct ErrataRecord {
  u64 n;
  i64 closed;
  i64 inversion;

  friend bool operator==(const ErrataRecord&, const ErrataRecord&) = default;
};

/// All n in [2, n_max] where the chain classifier disagrees with the
/// inversion sum, ascending.
std::vector<ErrataRecord> audit_s_closed(u64 n_max, SmarandacheCtx ctx = {});

/// The audited discrepancy list for n <= 10000 under s1 = 0, recorded from
/// a certified run of audit_s_closed.
const std::vector<ErrataRecord>& recorded_errata();

}  // namespace kempner
