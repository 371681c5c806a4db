#ifndef FLATCURVE_UTIL_HPP
#define FLATCURVE_UTIL_HPP

#include <cmath>
#include <cstddef>
#include <string>
#include <vector>

namespace flatcurve {

// Shortest round-trip decimal form, used by every CSV writer so that files
// parse back to the exact double.
std::string format_double(double x);

double mean_of(const std::vector<double>& xs);

// Sample standard deviation (n-1 denominator); 0 for fewer than two values.
double stddev_of(const std::vector<double>& xs);

}  // namespace flatcurve

#endif
