#pragma once

#include <functional>
#include <json.hpp>
#include <string>
#include <vector>

#include "lozenge/dual_graph.hpp"
#include "lozenge/engines.hpp"
#include "lozenge/errors.hpp"
#include "lozenge/families.hpp"

namespace lozenge {

enum class CheckMode { Engine, Formula, Both };

/// One verified instance: both sides of the identity as exact values.
struct CheckReport {
  std::string identity;
  int a = 0, b = 0, c = 0;
  Rational lhs;
  Rational rhs;
  bool pass = false;
  std::string detail;

  /// {identity, a, b, c, lhs, rhs, pass} plus "detail" when non-empty.
  nlohmann::json to_json() const;
};

/// Exact matching generating function used by every engine-mode check.
Rational engine_count(const Region& r, const EngineLimits& limits = limits_from_env());

// ---- Kuo condensation -------------------------------------------------------

/// t, u, v in the larger colour class V1, w in the other class; the four
/// appear in cyclic order on the outer face.
struct KuoQuadruple {
  TriCell t, u, v, w;
};

/// Throws DomainError describing the first violated requirement.
void validate_quadruple(const Region& g, const KuoQuadruple& q);

/// M(G-u) M(G-{t,v,w}) = M(G-t) M(G-{u,v,w}) + M(G-v) M(G-{t,u,w}).
CheckReport check_kuo(const Region& g, const KuoQuadruple& q);
CheckReport check_kuo(const DualGraph& g, const KuoQuadruple& q);

/// The marked quadruple on build_kuo_host(a,b,c): t is the north-west Up cell
/// of the top strip, u the S dent, v the Up cell below u on the north-east
/// side and w the Down cell in the south-east corner.
KuoQuadruple kuo_quadruple(int a, int b, int c);

/// The six vertex-deleted graphs of the host and the family region each one
/// reduces to after forcing.
struct KuoIdentification {
  std::string deleted;  // e.g. "G-{t,v,w}"
  Region literal;
  RegionSpec claimed;
};
std::vector<KuoIdentification> kuo_identifications(int a, int b, int c);

// ---- Recurrences ------------------------------------------------------------

/// M(S_{a,b,c}) M(P_{a,b-1,c+1})
///   = M(P_{a+1,b,c+1}) M(P_{a,b,c}) + M(P_{a+1,b+1,c}) M(S_{a-1,b-2,c+1}).
/// Requires 1 <= a <= b, b >= 2. Engine mode also checks that each of the six
/// Kuo subgraphs has the count of the region it is identified with.
CheckReport check_recurrence(int a, int b, int c, CheckMode mode);

/// The same recurrence with S', P' in place of S, P (closed forms).
CheckReport check_weighted_recurrence(int a, int b, int c);

enum class BigrecVariant { Resolved, Uncorrected };

/// Both sides of the recurrence with every M replaced by its Pochhammer
/// product. Uncorrected uses (c+i)_{b-a+i} and i_{b-a+i+1} in the two left
/// products in place of (c+i)_{b-a+1} and i_{b-a+i-1}; it does not balance.
std::pair<Rational, Rational> bigrec_sides(int a, int b, int c, BigrecVariant variant);

/// Requires a >= 1, b >= 2. PochhammerPole propagates.
CheckReport check_bigrec(int a, int b, int c);

// ---- Graph splitting --------------------------------------------------------

struct SplitCut {
  std::vector<TriCell> h;
  std::vector<TriCell> complement;
  /// Colour class playing V1: no edge may join V(H) ∩ V1 to V(G-H).
  Orientation v1 = Orientation::Up;
};

/// Thrown when a cut violates a hypothesis; what() starts with the
/// condition's name.
class SplitConditionError : public DomainError {
 public:
  using DomainError::DomainError;
};

/// Complement computed from g.
SplitCut make_cut(const Region& g, std::vector<TriCell> h, Orientation v1);

/// M(G) = M(H) M(G-H). Throws SplitConditionError ("Separating condition" /
/// "Balancing condition") and DomainError if h and complement do not
/// partition the cells of g.
CheckReport check_graph_splitting(const Region& g, const SplitCut& cut);
CheckReport check_graph_splitting(const DualGraph& g, const SplitCut& cut);

/// H = the top two strips of S_{1,1,c}; V1 = Down cells.
SplitCut s11_top_rows_cut(int c);

// ---- Factorisation and base cases -------------------------------------------

/// Engine count of STDH_{a,b,c} against
/// 2^(a+1) * engine(S'_{a,b,c}) * engine(S_{a,b-1,c}).
CheckReport check_factorization(int a, int b, int c);

/// 2^(a+1) s_prime_count(a,b,c) s_count(a,b-1,c) is an integer.
CheckReport check_stdh_integrality(int a, int b, int c);

/// s_count(0,b,c) = C(b+c+1,b) and s_count(1,1,c) = (c+1)(c+2), each also
/// against the engine, for b, c <= max_bc. One report per tuple.
std::vector<CheckReport> check_base_cases(int max_bc = 6);

// ---- Closed form against region --------------------------------------------

/// Engine mode: closed form vs engine count of the built region.
/// Formula mode uses a second closed-form route: MacMahon's triple product,
/// the Pochhammer form of Proctor's product (plain and weighted), and the
/// Kuo recurrences unrolled down to their base cases for S and S'. STDH has
/// no formula mode here (see check_stdh_integrality).
CheckReport check_family(Family family, int a, int b, int c, CheckMode mode);

// ---- Grids ------------------------------------------------------------------

struct Triple {
  int a, b, c;
};

/// All (a,b,c) in the inclusive box satisfying `keep`, in lexicographic order.
std::vector<Triple> grid(int a0, int a1, int b0, int b1, int c0, int c1,
                         const std::function<bool(const Triple&)>& keep = {});

/// Runs `check` on every tuple on up to `threads` workers (0 = hardware
/// concurrency). Results come back in tuple order. Exceptions thrown by a
/// check become failing reports carrying the message.
std::vector<CheckReport> run_grid(const std::vector<Triple>& tuples,
                                  const std::function<CheckReport(const Triple&)>& check,
                                  const std::string& identity, unsigned threads = 0);

}  // namespace lozenge
