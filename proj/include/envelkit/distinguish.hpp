#ifndef ENVELKIT_DISTINGUISH_HPP
#define ENVELKIT_DISTINGUISH_HPP

#include <optional>
#include <string>
#include <vector>

#include "envelkit/catalog.hpp"
#include "envelkit/invariants.hpp"
#include "envelkit/liealg.hpp"
#include "envelkit/poly.hpp"

namespace envelkit {

// Structural fingerprint of the invariant algebra Ltilde(L').
struct LtildeSummary {
    std::size_t dim = 0;
    std::vector<std::size_t> derived_dims;
    std::vector<std::size_t> lcs_dims;
    std::optional<std::size_t> nilpotency_class;
    std::size_t center_dim = 0;

    bool operator==(const LtildeSummary& o) const = default;
    std::string str() const;
};

// Isomorphism invariants of Utilde(L'). The polynomial survives only for
// display; comparisons use the dimension, the factorization signature over Q
// and, for cubics x^3 - b x, the square class of b (which the choice of
// complement generator cannot change).
struct UtildeInfo {
    std::size_t dim = 0;
    std::optional<UPoly> poly;
    std::optional<FactorSignature> signature;       // over Q, single-generator case
    std::optional<Scalar> zero_quadratic_cubic_b;   // poly == x^3 - b x with b != 0

    bool equivalent(const UtildeInfo& o) const;
    std::string str() const;
};

struct Fingerprint {
    std::size_t dim = 0;
    std::vector<std::size_t> derived_dims;
    std::vector<std::size_t> lcs_dims;
    bool solvable = false;
    std::optional<std::size_t> nilpotency_class;
    std::size_t dim_abelianization = 0; // dim L/L'
    std::size_t dim_lp_mod_lpp = 0;     // dim L'/L''
    std::size_t center_dim = 0;
    bool metabelian = false;
    std::optional<int> group;                 // dim-4 solvable only
    std::optional<std::size_t> index;         // characteristic zero only
    std::optional<std::size_t> semiradical_dim;
    std::optional<LtildeSummary> ltilde;      // when L' is abelian
    std::optional<UtildeInfo> utilde;         // when L' is abelian
    std::optional<std::string> provenance;

    std::string str() const;
};

Fingerprint fingerprint(const LieAlgebra& L);

// Equality up to the intended invariants (polynomials compared by class).
bool fingerprints_equivalent(const Fingerprint& a, const Fingerprint& b);

struct CertStep {
    std::string invariant;
    std::string lhs, rhs;
    std::string cite;
    bool differs = false;
};

struct Certificate {
    enum class Verdict { DistinctU, Inconclusive };
    Verdict verdict = Verdict::Inconclusive;
    std::vector<CertStep> steps;
    std::optional<std::string> conjecture_note; // cases open in positive characteristic

    bool distinct() const { return verdict == Verdict::DistinctU; }
    std::string str() const;
    std::string json() const;
};

// Machine-checkable certificate that U(L) and U(H) are non-isomorphic;
// every step cites the justifying result. Inconclusive is a value.
Certificate certify_distinct_U(const LieAlgebra& L, const LieAlgebra& H);

struct ReportItem {
    std::string suite;
    std::string name;
    bool pass = false;
    std::string expected, computed;
    double seconds = 0.0;
};

struct Report {
    std::string command;
    std::vector<ReportItem> items;

    void add(ReportItem item) { items.push_back(std::move(item)); }
    bool all_pass() const;
    std::size_t failures() const;
    std::string text() const;
    std::string json() const; // same content, schema 1
};

struct ReproOptions {
    std::vector<Scalar> grid;  // defaults to {-2,-1,0,1,2,3} over Q
    unsigned long seed = 0;
    unsigned jobs = 1;
    bool properties = true;    // include the randomized property suites
};

// Reproduces the worked computations, the claim checks, the six-group
// partition and the full pairwise distinctness sweep.
Report paper_repro(const ReproOptions& opts = {});

} // namespace envelkit

#endif
