// Scalar types used by the quantum modules.
//
// Every quantum computation is templated on a real type. The library ships
// three instantiations: double (53-bit), long double (64-bit, the default
// working precision) and a 128-bit binary float used by oracles and the
// high-precision CLI mode.
#pragma once

#include <boost/math/constants/constants.hpp>
#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/cpp_complex.hpp>

#include <complex>
#include <iomanip>
#include <limits>
#include <sstream>
#include <string>

namespace qgeom {

using HighReal = boost::multiprecision::number<
    boost::multiprecision::cpp_bin_float<128, boost::multiprecision::digit_base_2>,
    boost::multiprecision::et_off>;
using HighComplex = boost::multiprecision::number<
    boost::multiprecision::complex_adaptor<
        boost::multiprecision::cpp_bin_float<128, boost::multiprecision::digit_base_2>>,
    boost::multiprecision::et_off>;

template <typename Real>
struct ComplexOf {
    using type = std::complex<Real>;
};

template <>
struct ComplexOf<HighReal> {
    using type = HighComplex;
};

template <typename Real>
using Complex = typename ComplexOf<Real>::type;

template <typename Real>
constexpr int precision_bits() {
    return std::numeric_limits<Real>::digits;
}

template <typename Real>
Real pi() {
    return boost::math::constants::pi<Real>();
}

template <typename Real>
Complex<Real> make_complex(const Real& re, const Real& im) {
    return Complex<Real>(re, im);
}

template <typename Real>
Real real_part(const Complex<Real>& z) {
    using std::real;
    return Real(real(z));
}

template <typename Real>
Real imag_part(const Complex<Real>& z) {
    using std::imag;
    return Real(imag(z));
}

template <typename Real>
Real modulus(const Complex<Real>& z) {
    using std::abs;
    return Real(abs(z));
}

template <typename Real>
long double to_long_double(const Real& x) {
    return static_cast<long double>(x);
}

// Fixed, locale-independent decimal rendering. Used by every report so that
// output is byte-identical for identical inputs.
template <typename Real>
std::string format_real(const Real& x, int digits = std::numeric_limits<Real>::digits10) {
    std::ostringstream os;
    os.imbue(std::locale::classic());
    Real v = x;
    if (v == 0) v = 0;  // drop the sign of negative zero
    os << std::setprecision(digits) << v;
    return os.str();
}

}  // namespace qgeom
