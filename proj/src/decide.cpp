#include "focklab/decide.hpp"

namespace focklab::decide {

namespace {

void check_positive(const Rational& v, const char* name) {
    if (!v.is_positive())
        throw DomainError(std::string(name) + " must be positive, got " + v.str());
}

} // namespace

void EmbeddingQuery::validate() const {
    if (n < 1) throw DomainError("n must be a positive integer");
    if (ell < Rational(1)) throw DomainError("ell must be >= 1, got " + ell.str());
    check_positive(beta, "beta");
    check_positive(gamma, "gamma");
}

void ProjectionQuery::validate() const {
    if (n < 1) throw DomainError("n must be a positive integer");
    if (ell < Rational(1)) throw DomainError("ell must be >= 1, got " + ell.str());
    check_positive(alpha, "alpha");
    check_positive(beta, "beta");
    check_positive(gamma, "gamma");
}

EmbeddingQuery ProjectionQuery::embedding() const {
    EmbeddingQuery e;
    e.n = n;
    e.ell = ell;
    e.p = p;
    e.q = q;
    e.beta = projection_kappa(*this);
    e.gamma = gamma;
    e.rho = rho;
    e.eta = eta;
    return e;
}

DecideResult embed_decide_ex(const EmbeddingQuery& q) {
    q.validate();
    if (q.beta < q.gamma) return {true, 1};
    if (q.beta == q.gamma) {
        const Rational diff = q.rho - q.eta;
        const Rational two_n(2LL * q.n);
        if (q.q >= q.p) {
            // 2n(ell-1)(1/p - 1/q) <= rho - eta
            Rational lhs = two_n * (q.ell - Rational(1)) *
                           (q.p.reciprocal() - q.q.reciprocal());
            if (lhs <= diff) return {true, 2};
        } else {
            // 2n(1/q - 1/p) < rho - eta
            Rational lhs = two_n * (q.q.reciprocal() - q.p.reciprocal());
            if (lhs < diff) return {true, 3};
        }
    }
    return {false, 0};
}

bool embed_decide(const EmbeddingQuery& q) { return embed_decide_ex(q).decision; }

Rational projection_c(const ProjectionQuery& q) {
    q.validate();
    return q.gamma * (Rational(2) * q.alpha - q.beta) / (q.alpha * q.alpha);
}

Rational projection_kappa(const ProjectionQuery& q) {
    q.validate();
    const Rational denom = Rational(2) * q.alpha - q.beta;
    if (!denom.is_positive())
        throw DomainError("kappa undefined: beta >= 2 alpha");
    return q.alpha * q.alpha / denom;
}

ProjectionResult projection_decide_ex(const ProjectionQuery& q) {
    q.validate();
    ProjectionResult r;
    if (Rational(2) * q.alpha - q.beta <= Rational(0)) return r; // necessary: beta < 2 alpha
    r.kappa = projection_kappa(q);
    r.kappa_defined = true;
    DecideResult e = embed_decide_ex(q.embedding());
    r.decision = e.decision;
    r.branch = e.branch;
    return r;
}

bool projection_decide(const ProjectionQuery& q) {
    return projection_decide_ex(q).decision;
}

} // namespace focklab::decide
