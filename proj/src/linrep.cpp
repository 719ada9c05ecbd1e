#include "ghost/linrep.hpp"

#include "ghost/errors.hpp"

#include <algorithm>
#include <cmath>

namespace ghost {

std::vector<unsigned> digits(const mpz_class& n, unsigned base) {
    if (base < 2) {
        throw DomainError("digit base must be >= 2");
    }
    if (sgn(n) < 0) {
        throw DomainError("digits of a negative number");
    }
    std::vector<unsigned> out;
    mpz_class q = n;
    do {
        const unsigned long r = mpz_fdiv_q_ui(q.get_mpz_t(), q.get_mpz_t(), base);
        out.push_back(static_cast<unsigned>(r));
    } while (sgn(q) != 0);
    std::reverse(out.begin(), out.end());
    return out;
}

SmallMatrix operator*(const SmallMatrix& x, const SmallMatrix& y) {
    SmallMatrix r;
    r.dim = x.dim;
    for (unsigned i = 0; i < x.dim; ++i) {
        for (unsigned j = 0; j < x.dim; ++j) {
            mpz_class s = 0;
            for (unsigned k = 0; k < x.dim; ++k) {
                s += x.at(i, k) * y.at(k, j);
            }
            r.at(i, j) = s;
        }
    }
    return r;
}

LinearRepresentation build_linrep(const AffineParams& p) {
    LinearRepresentation rep;
    if (p.homogeneous()) {
        rep.dim = 1;
        rep.c0.dim = rep.c1.dim = 1;
        rep.c0.at(0, 0) = p.a0();
        rep.c1.at(0, 0) = p.a1();
        rep.left = {1, 0};
        rep.right = {p.f1(), 0};
        return rep;
    }
    rep.dim = 2;
    for (unsigned digit = 0; digit < 2; ++digit) {
        SmallMatrix m;
        m.dim = 2;
        m.at(0, 0) = p.a(digit);
        m.at(0, 1) = p.b(digit);
        m.at(1, 0) = 0;
        m.at(1, 1) = 1;
        (digit == 0 ? rep.c0 : rep.c1) = m;
    }
    rep.left = {1, 0};
    rep.right = {p.f1(), 1};
    return rep;
}

mpz_class eval_via_linrep(const LinearRepresentation& rep, const mpz_class& n) {
    if (sgn(n) <= 0) {
        throw DomainError("n must be >= 1");
    }
    const auto ds = digits(n, 2);
    // Apply C_{x_1} first, C_{x_k} last.
    std::array<mpz_class, 2> v = rep.right;
    for (std::size_t k = 1; k < ds.size(); ++k) {
        const SmallMatrix& c = rep.c(ds[k]);
        std::array<mpz_class, 2> w{};
        for (unsigned i = 0; i < rep.dim; ++i) {
            for (unsigned j = 0; j < rep.dim; ++j) {
                w[i] += c.at(i, j) * v[j];
            }
        }
        v = w;
    }
    mpz_class out = 0;
    for (unsigned i = 0; i < rep.dim; ++i) {
        out += rep.left[i] * v[i];
    }
    return out;
}

SpectralDiagnostic spectral_diagnostic(const AffineParams& p) {
    SpectralDiagnostic d;
    const mpz_class a_max = std::max(p.a0(), p.a1());
    if (p.homogeneous()) {
        d.rho = p.a_sum();
        d.rho_star = a_max;
    } else {
        // Q = [[A, b], [0, 2]]; the lower-right 1 of each C_i bounds rho* below by 1.
        d.rho = std::max(p.a_sum(), mpz_class(2));
        d.rho_star = std::max(a_max, mpz_class(1));
    }
    if (sgn(d.rho_star) == 0) {
        throw DomainError("joint spectral radius is zero");
    }
    if (d.rho == d.rho_star) {
        d.band = RatioBand::Zero;
        d.log_ratio = 0.0;
    } else if (d.rho == 2 * d.rho_star) {
        d.band = RatioBand::One;
        d.log_ratio = 1.0;
    } else {
        d.band = RatioBand::Between;
        d.log_ratio = std::log2(d.rho.get_d() / d.rho_star.get_d());
    }
    return d;
}

}  // namespace ghost
