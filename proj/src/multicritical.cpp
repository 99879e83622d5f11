#include "mapdist/multicritical.hpp"

#include <algorithm>

#include "mapdist/errors.hpp"

namespace mapdist {

MulticriticalData multicritical_data(int m) {
    if (m < 1) throw usage_error("multicritical_data: m must be >= 1");
    MulticriticalData data;
    data.m = m;
    std::vector<Rational> coeffs(m + 1);
    Rational mfall(1);  // m! / (m-l)!
    Rational lfact(1);  // l!
    Rational odd(1);    // (2l+1)!
    for (int l = 0; l <= m; ++l) {
        if (l > 0) {
            mfall *= Rational(m - l + 1);
            lfact *= Rational(l);
            odd *= Rational(2 * l) * Rational(2 * l + 1);
        }
        Rational c = lfact / odd * mfall;
        coeffs[l] = (l % 2 ? -c : c);
    }
    data.p_m = RPoly(std::move(coeffs));

    for (const auto& u : poly_roots(to_cpoly(data.p_m))) {
        Complex a = std::sqrt(u);
        if (a.real() < 0) a = -a;
        data.a.push_back(a);
    }
    std::sort(data.a.begin(), data.a.end(), [](const Complex& x, const Complex& y) {
        if (x.real() != y.real()) return x.real() < y.real();
        return x.imag() < y.imag();
    });

    data.g_c = Rational(m) / Rational(6 * (m + 1));
    data.V_c = Rational(m, 6);
    data.R_c = Rational(m + 1);
    data.d_f = 2 * (m + 1);
    return data;
}

}  // namespace mapdist
