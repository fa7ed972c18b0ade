#pragma once

// Exact decision engine for the embedding characterization between
// generalized Fock-Sobolev spaces F^p_{beta,rho} on C^n and for the
// boundedness of the Bergman projection P_alpha between the weighted
// L^p spaces. All comparisons are exact rational comparisons; the
// characterizations mix strict and non-strict inequalities, so floating
// point near thresholds would be unsound.

#include "focklab/ext_exponent.hpp"
#include "focklab/rational.hpp"

namespace focklab::decide {

struct EmbeddingQuery {
    int n = 1;            // complex dimension
    Rational ell{1};      // weight power, >= 1
    ExtExponent p, q;
    Rational beta{1}, gamma{1}; // source/target weights, > 0
    Rational rho{0}, eta{0};    // Sobolev orders

    void validate() const;
};

struct ProjectionQuery {
    int n = 1;
    Rational ell{1};
    ExtExponent p, q;
    Rational alpha{1};          // projection parameter, > 0
    Rational beta{1}, gamma{1};
    Rational rho{0}, eta{0};

    void validate() const;
    EmbeddingQuery embedding() const; // source weight replaced by kappa
};

// Which of the three characterizing conditions held (0 = none).
struct DecideResult {
    bool decision = false;
    int branch = 0;
};

// F^p_{beta,rho} -> F^q_{gamma,eta} holds iff
//   (1) beta < gamma, or
//   (2) beta = gamma, q >= p and 2n(ell-1)(1/p - 1/q) <= rho - eta, or
//   (3) beta = gamma, q <  p and 2n(1/q - 1/p) < rho - eta,
// with 1/inf = 0 exactly.
DecideResult embed_decide_ex(const EmbeddingQuery& q);
bool embed_decide(const EmbeddingQuery& q);

// c = gamma (2 alpha - beta) / alpha^2; may be <= 0 when beta >= 2 alpha.
Rational projection_c(const ProjectionQuery& q);

// kappa = alpha^2 / (2 alpha - beta); only defined for beta < 2 alpha.
Rational projection_kappa(const ProjectionQuery& q);

struct ProjectionResult {
    bool decision = false;
    int branch = 0;          // conditions of the boundedness theorem, 0 = none
    bool kappa_defined = false;
    Rational kappa{0};
};

// P_alpha : L^p_{beta,rho} -> L^q_{gamma,eta} bounded iff beta < 2 alpha and
// the embedding with source weight kappa holds.
ProjectionResult projection_decide_ex(const ProjectionQuery& q);
bool projection_decide(const ProjectionQuery& q);

} // namespace focklab::decide
