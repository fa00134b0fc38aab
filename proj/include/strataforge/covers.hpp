#pragma once

#include "strataforge/ext.hpp"
#include "strataforge/lattice.hpp"
#include "strataforge/recollement.hpp"

namespace strataforge {

// A verified projective cover P ->> S together with the evidence tables that
// certify it: dim Hom(P, S_v) is the indicator of the covered simple and
// dim Ext^1(P, S_v) vanishes identically.
struct CoverCertificate {
    int simple_vertex;
    int stratum;  // index into the stratification, -1 when untracked
    Module cover;
    ModuleMorphism epi;
    std::vector<int> hom_row;
    std::vector<int> ext_row;
};

// Build and verify the certificate for a claimed cover; throws VerifyError
// when the evidence tables fail.
CoverCertificate certify_cover(const Module& p, int simple_vertex, int stratum = -1);
void verify_certificate(const CoverCertificate& c);

// Moving covers across a recollement: j_! of a corner cover covers the glued
// simple; j^* and i^* restrict covers back to the stratum algebras.  The
// returned certificate is re-verified from scratch.
enum class TransportCase { OpenExtend, OpenRestrict, ClosedRestrict };
CoverCertificate transport_cover(const RecollementDatum& r, TransportCase tc,
                                 const CoverCertificate& cert, int stratum = -1);

// One level of the inductive construction: the closed-most stratum against
// the union of the rest, with the open-part covers already transported up.
struct GlueLevel {
    StratifiedAlgebra sa;
    RecollementDatum r;
    std::vector<int> open_lambda;                 // open vertices, ascending
    std::map<int, CoverCertificate> open_covers;  // vertex -> transported cover
    long long budget = 1 << 20;
};

// B_L: the inflation of the closed-stratum projective cover of L.
Module build_B(const GlueLevel& g, int closed_vertex);

// P = direct sum over open simples M of the known cover of M, with
// multiplicity dim Ext^1(B_L, S_M).
struct AssembledP {
    Module p;
    std::vector<int> ext_dims;  // indexed like g.open_lambda
};
AssembledP assemble_P(const GlueLevel& g, const Module& b);

// The exhaustive search for the maximal-length quotient Q of P carrying a
// class epsilon in Ext^1(B_L, Q) such that composing with epsilon gives an
// isomorphism Hom(Q, S_N) -> Ext^1(B_L, S_N) for every open simple N.
struct QSearch {
    Resolution res_b;                  // resolution of B_L used for all classes
    QuotientModuleResult q;            // the chosen quotient of P
    ModuleMorphism epsilon;            // cocycle omega1(B_L) -> Q
    std::vector<int> passing_lengths;  // lengths of every passing quotient, desc
};
QSearch find_Q_epsilon(const GlueLevel& g, const Module& p, const Module& b,
                       const std::vector<int>& ext_dims);

// P_L = middle term of 0 -> Q -> P_L -> B_L -> 0, certified.
CoverCertificate extend_to_cover(const GlueLevel& g, const QSearch& s, int closed_vertex);

// Consistency check: Q is recovered as j_! j^* P_L.
bool check_Q_recovered(const GlueLevel& g, const QSearch& s, const CoverCertificate& cert);

// Diagnostics of the search for one closed simple (vertex indices are in the
// coordinates of the outermost algebra).
struct CoverOutcome {
    int lambda_vertex;
    std::vector<int> passing_lengths;
    int q_length;
    bool q_recovered;
    bool unique_maximal;
};

struct CoversResult {
    std::map<int, CoverCertificate> covers;  // vertex -> certificate
    std::vector<CoverOutcome> outcomes;      // per closed simple, all levels
};

// The full induction over the stratification, closed-to-open.
CoversResult construct_all_covers(const StratifiedAlgebra& sa, long long budget = 1 << 20);

}  // namespace strataforge
