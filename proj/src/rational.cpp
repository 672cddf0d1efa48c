#include "circleforge/rational.hpp"

#include <cmath>

namespace circleforge {

std::string rat_to_string(const Rat& x) {
    if (x.get_den() == 1) return x.get_num().get_str();
    return x.get_num().get_str() + "/" + x.get_den().get_str();
}

Rat rat_from_string(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("empty rational literal");
    Rat out;
    if (out.set_str(s, 10) != 0)
        throw std::invalid_argument("bad rational literal: '" + s + "'");
    if (out.get_den() == 0) throw std::invalid_argument("zero denominator: '" + s + "'");
    out.canonicalize();
    return out;
}

Rat rat_from_double(double x) {
    if (!std::isfinite(x)) throw std::invalid_argument("non-finite double");
    Rat out;
    mpq_set_d(out.get_mpq_t(), x);
    return out;
}

Rat snap_to_denominator(const Rat& x, const Int& max_den) {
    if (max_den < 1) throw std::invalid_argument("max_den must be >= 1");
    if (x.get_den() <= max_den) return x;

    // continued-fraction walk with convergents h/k
    Int num = x.get_num(), den = x.get_den();
    Int hm2 = 0, km2 = 1, hm1 = 1, km1 = 0;
    Int a, r;
    Int n = num, d = den;
    Rat best;
    bool have_best = false;
    auto consider = [&](const Int& pn, const Int& pd) {
        if (pd < 1 || pd > max_den) return;
        Rat cand(pn, pd);
        cand.canonicalize();
        if (!have_best || abs(cand - x) < abs(best - x)) {
            best = cand;
            have_best = true;
        }
    };
    while (d != 0) {
        mpz_fdiv_qr(a.get_mpz_t(), r.get_mpz_t(), n.get_mpz_t(), d.get_mpz_t());
        Int h = a * hm1 + hm2;
        Int k = a * km1 + km2;
        if (k > max_den) {
            // best semiconvergent with denominator within the cap
            if (km1 > 0) {
                Int t = (max_den - km2) / km1;
                if (t > 0) consider(t * hm1 + hm2, t * km1 + km2);
            }
            break;
        }
        consider(h, k);
        hm2 = hm1; km2 = km1; hm1 = h; km1 = k;
        n = d; d = r;
    }
    if (!have_best) {
        // fall back to the nearest integer
        Int fl;
        mpz_fdiv_q(fl.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
        Rat lo(fl), hi(fl + 1);
        best = (abs(lo - x) <= abs(hi - x)) ? lo : hi;
    }
    return best;
}

}  // namespace circleforge
