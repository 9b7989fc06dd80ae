#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "minorforge/families.hpp"
#include "minorforge/minors.hpp"
#include "minorforge/planarity.hpp"

namespace minorforge {

struct CertifiedMinor {
  MinorStep step;
  /// Missing when no pair leaves a planar graph (a counterexample).
  std::optional<ApexPairCertificate> apex;
  /// The certificate re-validated against a fresh planarity check.
  bool validated = false;
};

struct MemberReport {
  CanonicalCert cert;
  std::string graph6;
  std::size_t vertices = 0;
  std::size_t edges = 0;
  std::size_t min_degree = 0;
  std::vector<CertifiedMinor> minors;
  /// Auxiliary: non-planar and contains a Petersen-family graph as a minor.
  bool nonplanar = false;
  bool petersen_minor = false;
};

struct VerificationReport {
  std::vector<MemberReport> members;
  std::size_t minors_checked = 0;
  std::size_t counterexamples = 0;
  /// A certificate was produced but failed re-validation.
  std::size_t invalid_certificates = 0;
  std::vector<std::string> warnings;
  double seconds = 0;

  bool counterexample_found() const { return counterexamples > 0; }
  /// 0 = all certified, 2 = counterexample, 3 = internal validation failure.
  int exit_code() const;
};

struct VerifyOptions {
  std::size_t jobs = 1;
  /// Run the non-planarity / Petersen-minor sanity check on every member.
  bool auxiliary_checks = true;
};

/// For every member and every deduplicated one-step minor, searches an apex
/// pair and re-validates it. Members appear in family order, minors in
/// one_step_minors order, independent of the worker count.
VerificationReport verify_excluded_minors(const FamilyClosure& family, const VerifyOptions& options = {});

struct HandCheck {
  std::string name;
  std::string expected;
  std::string actual;
  bool passed = false;
};

struct HandProofReport {
  std::vector<HandCheck> checks;
  bool all_passed() const;
};

/// Orbit counts and structural claims for the seven Heawood graphs of minimum
/// degree at least four.
HandProofReport crosscheck_hand_proofs(const std::vector<MultiGraph>& remaining);

struct LocalLinklessEntry {
  CanonicalCert cert;
  std::string graph6;
  std::vector<VertexId> failing_vertices;
};

/// Members whose neighbourhoods are not all linkless. Only members with a
/// vertex of degree at least 6 can fail (smaller neighbourhoods are linkless)
/// and only those are searched.
std::vector<LocalLinklessEntry> locally_linkless_sweep(const FamilyClosure& family);

enum class ReportFormat { Json, Markdown };

nlohmann::json report_json(const VerificationReport& r);
std::string report_markdown(const VerificationReport& r);
/// Writes the report; no timing information is included, so repeated runs
/// give identical files. Throws std::runtime_error when the path is unwritable.
void emit_report(const VerificationReport& r, ReportFormat format, const std::filesystem::path& path);

}  // namespace minorforge
