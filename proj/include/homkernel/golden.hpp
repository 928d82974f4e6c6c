#pragma once

#include <string>
#include <vector>

#include "homkernel/connection.hpp"

/// Reference lambda-map and curvature matrices for the built-in pairs, as
/// printed in the literature, with a short list of corrected misprints.
namespace homkernel::golden {

using cas::Matrix;
using cas::Scalar;
using homspace::FamilyId;

/// A printed entry that disagrees with the computed value, together with the
/// value that replaces it.
struct Erratum {
  std::string table;  ///< e.g. "lambda(u1)" or "R(u1,u2)"
  std::size_t row = 0, col = 0;  ///< zero-based
  std::string printed;
  std::string corrected;
  std::string reason;
};

struct GoldenTable {
  std::string name;
  Matrix printed;    ///< verbatim transcription (eta substituted)
  Matrix expected;   ///< printed with errata applied
};

struct GoldenSet {
  std::vector<GoldenTable> lambda;     ///< lambda(u1) .. lambda(u4)
  std::vector<GoldenTable> curvature;  ///< R(u1,u2), R(u1,u3), R(u1,u4), R(u2,u3), R(u2,u4), R(u3,u4)
  std::vector<Erratum> errata;
};

/// Throws Error for families without tables (there are none among the built-ins).
GoldenSet golden_tables(const FamilyId& id);

struct Mismatch {
  std::string table;
  std::size_t row = 0, col = 0;
  Scalar expected, computed;
};

struct ErratumCheck {
  Erratum erratum;
  bool printed_differs = false;     ///< printed value is not the computed one
  bool corrected_matches = false;   ///< computed value equals the correction
  bool printed_inconsistent = false;  ///< printed table violates an identity
  std::string evidence;
  bool ok() const { return printed_differs && corrected_matches && printed_inconsistent; }
};

struct GoldenComparison {
  std::size_t entries = 0;
  std::vector<Mismatch> mismatches;
  std::vector<ErratumCheck> errata;
  bool pass() const;
};

/// Entry-for-entry comparison of computed lambda matrices with the tables.
GoldenComparison compare_lambda(const FamilyId& id, const homspace::HomogeneousPair& p,
                                const connection::ConnectionData& c);
GoldenComparison compare_curvature(const FamilyId& id, const homspace::HomogeneousPair& p,
                                   const connection::CurvatureData& r);

}  // namespace homkernel::golden
