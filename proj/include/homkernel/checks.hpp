#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "homkernel/hypersurface.hpp"

/// Check orchestration and reports for the command-line tool.
namespace homkernel::checks {

using homspace::FamilyId;
using homspace::HomogeneousPair;

enum class Status { pass, fail, conditional };
std::string status_name(Status s);

struct CheckResult {
  std::string name;
  Status status = Status::pass;
  std::string summary;
  /// Witness or genericity items, one per entry.
  std::vector<std::string> details;
};

/// Checks in execution order, plus free-form lines (tables, verdicts) that
/// only the human rendering shows.
struct Report {
  std::string subject;
  std::vector<CheckResult> results;
  std::vector<std::string> notes;
  /// Extra machine lines (e.g. VERDICT ...), emitted after the CHECK lines.
  std::vector<std::string> machine_extra;

  bool all_pass() const;
  /// 0 when every check passes (conditional counts as passing), otherwise
  /// the code of the first failing check's class.
  int exit_code() const;
  std::string human() const;
  /// One `CHECK <name> <PASS|FAIL|COND> [details]` line per check.
  std::string machine() const;
};

/// jacobi, nonreductive, connection-axioms, golden-lambda,
/// golden-curvature, symmetric-locus, constant-curvature-locus.
const std::vector<std::string>& all_check_names();
/// Exit code for a failing check class.
int failure_code(const std::string& check_name);

/// The built-in family whose pair equals `p` structurally, if any.
std::optional<FamilyId> identify_family(const HomogeneousPair& p);

/// Runs the named checks (all applicable ones when `names` is empty). The
/// golden and locus checks need a family; without one they are skipped when
/// running the default set and fail when requested explicitly.
Report run_checks(const HomogeneousPair& p, const std::optional<FamilyId>& id,
                  const std::vector<std::string>& names = {});

/// Parameter values on which the family is locally symmetric, and a fixed
/// rational point off that locus.
cas::Bindings symmetric_locus(const FamilyId& id);
cas::Bindings generic_point(const FamilyId& id);
/// Constant-curvature locus when the family has one.
std::optional<cas::Bindings> constant_curvature_locus(const FamilyId& id);

struct ClassifyRequest {
  FamilyId family;
  std::vector<std::string> normal;  ///< four expressions
  int eps = 1;
  std::optional<hypersurface::CaseTag> tag;
  std::optional<std::vector<std::vector<std::string>>> frame;  ///< three vectors of four expressions
  std::vector<std::pair<std::string, std::string>> bindings;   ///< name = expression
};
/// Codazzi / parallel / totally geodesic verdicts for a constant normal. A2
/// normals are read in the normalized metric. For A1 and B1 the report also
/// replays the symbolic non-existence argument.
Report classify(const ClassifyRequest& req);

struct Table1Row {
  FamilyId family;
  bool codazzi = false, proper_parallel = false, totally_geodesic = false;
  std::vector<std::string> evidence;
};
/// The published pattern: A1 and B1 admit nothing, the others everything.
Table1Row expected_table1_row(const FamilyId& id);
std::vector<Table1Row> table1_rows(std::uint64_t seed, std::size_t sweep_size = 100);
Report table1_report(std::uint64_t seed, std::size_t sweep_size = 100);

}  // namespace homkernel::checks
