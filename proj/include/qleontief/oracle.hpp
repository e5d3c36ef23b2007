#pragma once

// Exhaustive certifiers for the characterizations of (regular)
// quasi-Leontief functions on finite posets.
//
// On a finite poset every chain contains its infimum and supremum, so chain
// inf preservation reduces to isotonicity and every subset is chain upper
// closed; neither is checked at runtime.

#include <optional>
#include <vector>

#include "qleontief/certificate.hpp"
#include "qleontief/utility.hpp"

namespace qleontief {

struct CertifiedResult {
  Certificate certificate;
  std::optional<Utility> utility;
};

/// For every x, looks for the least element of u^{-1}(up u(x)). On success
/// the returned utility carries the interior table.
CertifiedResult certify_quasi_leontief(const Utility& u);

class CertificationError : public std::runtime_error {
 public:
  CertificationError(const std::string& what, Certificate cert)
      : std::runtime_error(what), cert_(std::move(cert)) {}
  const Certificate& certificate() const { return cert_; }

 private:
  Certificate cert_;
};

/// certify_quasi_leontief, throwing CertificationError on failure.
Utility certify(const Utility& u);

/// Attained values, midpoints between consecutive values, and one level just
/// below and just above the range.
std::vector<Rational> default_probe_levels(const Utility& u);

/// Checks every level of probes ∪ u(X): its level set is empty or has a least
/// element. On pass the certificate holds the dual table for the levels that
/// lie in down(u(X)).
Certificate certify_regular(const Utility& u, const std::vector<Rational>& probes);
Certificate certify_regular(const Utility& u);

Certificate check_isotone(const Utility& u);
Certificate check_property_phi(const Utility& u);
Certificate check_lower_bounded_level_sets(const Utility& u, const std::vector<Rational>& probes);
/// Requires a total meet table; throws std::invalid_argument otherwise.
Certificate check_meet_homomorphism(const Utility& u);

/// Cross-checks the definition-based verdict against isotone ∧ Φ ∧ lower
/// bounded level sets and, on inf-semilattices, the meet-homomorphism
/// identity. Passes iff all legs agree. Throws std::invalid_argument when the
/// domain is not filtered.
Certificate check_characterization_equivalence(const Utility& u);

/// Two-sided check x >= table(λ) <=> u(x) >= λ over X times the table.
Certificate verify_galois(const Utility& u, const std::vector<DualEntry>& dual_table);

}  // namespace qleontief
