#ifndef SPINRAD_CONSTANTS_HPP
#define SPINRAD_CONSTANTS_HPP

namespace spinrad {

// Fundamental constants in Gaussian (CGS) units.  All library numerics that
// matter are dimensionless ratios; these values only anchor unit conversion.
struct PhysicalConstants {
    double e0 = 4.80320471257e-10;   // elementary charge [esu], > 0
    double m0 = 9.1093837015e-28;    // electron rest mass [g]
    double c = 2.99792458e10;        // speed of light [cm/s]
    double hbar = 1.054571817e-27;   // reduced Planck constant [erg s]

    // Bohr magneton e0*hbar/(2 m0 c) [erg/G].
    constexpr double bohr_magneton() const { return e0 * hbar / (2.0 * m0 * c); }

    // Critical (Schwinger) field m0^2 c^3 / (e0 hbar) [G], about 4.414e13 G.
    // Some sources quote m0^2 c^2/(e0 hbar); that variant is not dimensionally
    // consistent in Gaussian units, so the c^3 form is used throughout.
    constexpr double schwinger_field() const {
        return m0 * m0 * c * c * c / (e0 * hbar);
    }
};

inline constexpr PhysicalConstants kConstants{};

} // namespace spinrad

#endif
