#pragma once

#include <filesystem>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "trivdiag/nabla3.hpp"
#include "trivdiag/parking.hpp"
#include "trivdiag/symfunc.hpp"
#include "trivdiag/tamari.hpp"

namespace trivdiag::verify {

struct VerificationReport {
  std::string name;
  /// "identity" for an equality check; "erratum" when the check reproduces a
  /// known disagreement (pass means the disagreement was reproduced).
  std::string kind = "identity";
  nlohmann::json params = nlohmann::json::object();
  std::string lhs;
  std::string rhs;
  bool pass = false;
  std::string witness;  // first differing coefficient, empty on success
  std::string convention;
  std::vector<std::string> notes;
  double runtime_seconds = 0;
};

/// Thread-safe store of posets keyed by (n, r), optionally backed by a cache
/// directory.
class PosetCache {
 public:
  explicit PosetCache(std::optional<std::filesystem::path> dir = std::nullopt) : dir_(std::move(dir)) {}
  const tamari::TamariPoset& get(int n, int r);

 private:
  std::optional<std::filesystem::path> dir_;
  std::mutex mutex_;
  std::map<std::pair<int, int>, std::unique_ptr<tamari::TamariPoset>> posets_;
};

/// How the graded parking sums are assembled: reading order of the cars, an
/// optional omega twist, and whether q1 and q2 trade places.
struct Convention {
  parking::ReadingOrder order = parking::ReadingOrder::diagonals;
  bool apply_omega = false;
  bool swap_q = false;

  std::string to_string() const;
  bool operator==(const Convention&) const = default;
};

/// All eight conventions; the default one comes first.
std::vector<Convention> all_conventions();

using symcore::SymFuncQ;
using symcore::SymFuncQ3;

/// sum_beta i_beta e_co(beta).
SymFuncQ frob_111(int n, int r, PosetCache& cache);
/// sum_lambda (-1)^{n-l} (rn+1)^{l-2} prod_k binom((r+1)k, k) p_lambda / z_lambda.
SymFuncQ frob_p(int n, int r);
/// sum_lambda (rn+1)^{l-2} prod_k binom(r((r+1)n-k+1), k)/(rn-k+1) m_lambda.
SymFuncQ frob_m(int n, int r);
/// Sign-free twin of frob_p.
SymFuncQ polya_rhs(int n, int r);
/// sum_beta i_beta h_co(beta).
SymFuncQ polya_lhs(int n, int r, PosetCache& cache);

/// sum_beta sum_{f in PF(beta)} i_beta(q1) q2^dinv(f) Q_co(f) with co(f) read
/// under `convention`. Throws std::logic_error if a per-shape sum is not
/// symmetric.
SymFuncQ3 conjecture1_rhs(int n, int r, const Convention& convention, PosetCache& cache);

/// sum_{f in PF(beta)} Q_co(f) as a symmetric function (row reading).
SymFuncQ pf_fundamental_sum(const tamari::DyckPath& beta);

/// Closed form (r+1)/(n(rn+1)) binom((r+1)^2 n + r, n-1).
Rational interval_closed_form(int n, int r);

VerificationReport dimension_identity(int n, int r, PosetCache& cache);
VerificationReport interval_formula_check(int n, int r, PosetCache& cache);
VerificationReport trivial_part_check(int n, int r, PosetCache& cache);
VerificationReport path_count_check(int n, int r);
VerificationReport parking_count_check(int n, int r);
VerificationReport frob_chain_check(int n, int r, PosetCache& cache);
VerificationReport polya_check(int n, int r, PosetCache& cache);
VerificationReport pf_fundamental_sum_check(const tamari::DyckPath& beta);
/// pf_fundamental_sum_check over every path of D_n^(r).
VerificationReport pf_fundamental_all(int n, int r);
/// sum_beta e_co(beta) against the kernel's graded Frobenius at (1,1,0).
VerificationReport frob_parking_check(int n, unsigned jobs = 1);
VerificationReport gen_series_identity(const Rational& a, int b, int order);
VerificationReport cauchy_check(int n);
VerificationReport subste_check(int n, int r);

VerificationReport nabla_charpoly_check();
VerificationReport nabla_eigen_check();
VerificationReport nabla_closed_form_check(int r);
VerificationReport nabla_q111_check(int r);
VerificationReport tnk_erratum_report(int n, int k);

/// Kernel Hilbert series and graded Frobenius against the printed tables
/// (n <= 4), with the dimension and alternant totals.
VerificationReport harmonics_kernel_check(int n, unsigned jobs = 1);
/// Components with |d| in {binom(n,2)+1, binom(n,2)+2} vanish and H_n(q) is
/// Schur positive.
VerificationReport degree_bound_check(int n, unsigned jobs = 1);
/// q3 = 0, q1 = q2 = 1 gives (n+1)^(n-1).
VerificationReport bivariate_specialization_check(int n, unsigned jobs = 1);
VerificationReport closure_check(int n, unsigned jobs = 1);
VerificationReport higher_space_check(int n, int r);
VerificationReport commutator_random_check(int n, int instances, int max_degree, unsigned seed);
VerificationReport scalar_product_check(int n, int pairs, int max_degree, unsigned seed);

/// Searches all conventions at (3,1) against nabla3 h3(1) at q3 = 1, then
/// reuses the first matching one at (n, r).
VerificationReport conjecture1_check(int n, int r, PosetCache& cache);

/// Names accepted by run_all, in execution order.
const std::vector<std::string>& identity_names();

struct RunConfig {
  /// Identity names or "all".
  std::vector<std::string> names{"all"};
  std::optional<int> n;
  std::optional<int> r;
  unsigned jobs = 1;
  std::optional<std::filesystem::path> cache_dir;
};

class UnknownIdentity : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Runs the selected identities over their default parameter ranges (or the
/// given n / r). Report order does not depend on `jobs`.
std::vector<VerificationReport> run_all(const RunConfig& config);

}  // namespace trivdiag::verify
