#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "qrep/frobenius.hpp"
#include "qrep/matrix.hpp"
#include "qrep/tqft_spaces.hpp"

namespace qrep {

// P_g[A] on the standard genus-g basis (columns: input trees, rows: output trees).
// variant selects one of two dual triangulations of the handle graph.
Matrix p_matrix(const Algebra& a, int genus, int variant = 0);

// Same matrix element by element without shared tensor caches or threads.
Matrix p_matrix_serial(const Algebra& a, int genus, int variant = 0);

// P_g[A] v, computing only the columns where v is nonzero.
std::vector<Scalar> p_apply(const Algebra& a, int genus, const std::vector<Scalar>& v, int variant = 0);

// Euler characteristic of the closed genus-g surface.
inline int euler_characteristic(int genus) { return 2 - 2 * genus; }

struct RelationCheck {
    std::string name;
    bool holds = false;
    std::string detail;
    bool evaluated = true;
};

// Algebras used by the relation suite at one level.
struct AdeFamily {
    CategoryPtr cat;
    Algebra unit;
    std::optional<Algebra> d;
    std::optional<Algebra> e;
};
AdeFamily ade_family(CategoryPtr cat);

// Level relations between P_g[D] and P_g[E], plus multiplicativity under the
// tensor product and additivity under the direct sum on ADE pairs. Products
// with more than max_product_summands summands are listed as not evaluated.
std::vector<RelationCheck> verify_fusion_relations(const AdeFamily& fam, int genus, int max_product_summands = 32);

struct Projector {
    std::string name;
    Matrix matrix;
    Scalar trace;
};

struct ProjectorSet {
    std::vector<Projector> projectors;  // named "D+", "D-" and, with E, "E+", "E-", "W"
    std::vector<RelationCheck> checks;  // idempotency and comparisons with the closed forms
    const Projector* find(const std::string& name) const;
};

struct UnsplitSpectrum : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Spectral idempotents of the commuting family {P_g[D], P_g[E]}.
// series is "D" or "E"; E requires an exceptional algebra at the level.
ProjectorSet pi_projectors(const AdeFamily& fam, int genus, const std::string& series);

struct SummandDim {
    std::string name;
    long dim = 0;
};

struct DiscrepancyNote {
    std::string name;
    long computed = 0;
    long stated = 0;
};

struct DecompositionReport {
    int genus = 0;
    int level = 0;
    std::string series;
    std::vector<SummandDim> dims;
    std::vector<Projector> witnesses;
    long verlinde = 0;
    std::vector<RelationCheck> checks;
    std::vector<DiscrepancyNote> notes;
};

// Level must be even and at least 4; series "E" requires level 10, 16 or 28.
DecompositionReport decomposition_report(const AdeFamily& fam, int genus, const std::string& series);

struct HypothesisNotMet : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct ReducibilityWitness {
    int label = 0;
    std::vector<Scalar> image;   // P_g v^g_i
    std::vector<Scalar> vector;  // v^g_i
    bool reducible = false;
};

// Exhibits v^g_i whose image under P_g[A] is not proportional to it.
ReducibilityWitness reducibility_certificate(const Algebra& a, int genus);

}  // namespace qrep
