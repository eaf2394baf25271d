#pragma once

#include <string>

#include "acnet/admittance.hpp"
#include "acnet/eigensolver.hpp"

namespace acnet {

/// SVG 1.1 picture of a spectrum in the complex plane together with the
/// regions that must contain it at frequency s: the disk |1 - z| <= |s|/Re s,
/// the two circles centered (1, +-|Im s|/Re s) of radius
/// sqrt(1 + (Im s/Re s)^2), and the segment [0, 2].
///
/// Mathematical orientation (y up); the viewport is fitted to the circles and
/// eigenvalues with a 10% margin.
std::string render_spectrum_svg(const Spectrum& spectrum, ComplexFrequency s);

}  // namespace acnet
