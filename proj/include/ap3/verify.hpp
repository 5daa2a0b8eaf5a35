#pragma once

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

#include "ap3/budget.hpp"
#include "ap3/rank_polynomial.hpp"

namespace ap3 {

enum class ReportStatus { pass, fail, skipped };

const char* to_string(ReportStatus s);

/// One comparison of a closed form (or expected counterexample count) with
/// an enumerated value. `status` is pass exactly when the two strings agree.
struct VerificationReport {
    std::string quantity;
    int n = 0;
    std::string closed;
    std::string enumerated;
    ReportStatus status = ReportStatus::fail;
    std::string note;  ///< reason for a skip, or extra context
};

VerificationReport compare_values(std::string quantity, int n, const BigInt& closed, const BigInt& enumerated);
VerificationReport compare_values(std::string quantity, int n, const RankPolynomial& closed,
                                  const RankPolynomial& enumerated);
/// Property check: passes iff no counterexample was found.
VerificationReport counterexamples(std::string quantity, int n, std::uint64_t found, std::string note = {});
VerificationReport skipped(std::string quantity, int n, std::string why);

using Reports = std::vector<VerificationReport>;

/// Individual comparisons. Each enumerates exactly what its name says and
/// compares it against the closed forms; they are the building blocks of
/// verify_all and are also called directly by the acceptance suite.
namespace checks {

/// Order ideals of P_n: count vs f(n), largest antichain vs sigma(n), number
/// of largest antichains vs g(n).
Reports Pn_ideals(int n, const Budget& budget = {});
/// Brute-force valid subsets of C([n],3): count, sigma, g.
Reports valid_subsets(int n, const Budget& budget = {});
/// Consistency criterion vs realization oracle on every unordered pair of triples.
Reports consistency(int n);
/// One pass over M_n: |M_n| (enumerated and by transfer matrix), max
/// reducible entries, tableaux at the bound, F(M_n,q), column bound.
Reports Mn(int n, const Budget& budget = {});
/// sigma(n) and g(n) from the column-pair dynamic program over M_n.
Reports Mn_profile(int n);
/// K_n by product construction: |K_n| vs g(n), F(K_n,q), split/glue
/// round trip and the disjoint-union count; for small n also the filter
/// enumeration and the reducible-count definition.
Reports Kn(int n, const Budget& budget = {});
/// Even-case rank polynomial: closed product vs the two-part decomposition.
Reports Kn_even_parts(int m);
/// phi: Phi_n -> P_n is an order isomorphism.
Reports phi_isomorphism(int n);
/// psi: Phi_n -> Q_n (join-irreducibles of M_n) is an order isomorphism.
Reports psi_isomorphism(int n, const Budget& budget = {});
/// J(P_n) -> M_n, ideal -> join of psi(phi^{-1}(x)), is an order isomorphism.
Reports ideal_lattice_isomorphism(int n, const Budget& budget = {});
/// theta: K_n^L -> M_{floor(n/2)+1} is an order isomorphism (and the
/// A_n-level order and weak-increase equivalences hold).
Reports theta_isomorphism(int n);
/// Both right_iso variants are order isomorphisms onto their targets.
Reports right_isomorphism(int m);
/// Join-irreducibles of K_n: classification vs direct computation (n <= 9),
/// the four-block structure for even n, the product isomorphism for odd n.
Reports Un_structure(int n);
/// Distributive-lattice laws on M_n: exhaustive when |M_n| <= 1024, else
/// `samples` random triples.
Reports Mn_lattice_laws(int n, std::uint64_t samples = 100'000, std::uint64_t seed = 1);
/// Same for K_n, plus closure of K_n under the join and meet of M_n.
Reports Kn_lattice_laws(int n, std::uint64_t samples = 100'000, std::uint64_t seed = 1);

}  // namespace checks

struct VerifyOptions {
    int n_max = 8;
    Budget budget;
    unsigned jobs = 1;
};

/// Runs every acceptance comparison whose n lies in range and is at most
/// n_max. Tasks run on `jobs` threads; the report order is fixed by the task
/// list, so output does not depend on scheduling. Tasks started after the
/// deadline, or refused by the item budget, are reported as skipped.
Reports verify_all(const VerifyOptions& options);

/// Fixed-width text table, one row per report.
void write_report_table(std::ostream& out, const Reports& reports);
/// One JSON object per line.
void write_report_json_lines(std::ostream& out, const Reports& reports);

bool any_failed(const Reports& reports);
bool any_skipped(const Reports& reports);

}  // namespace ap3
