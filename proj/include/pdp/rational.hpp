#ifndef PDP_RATIONAL_HPP
#define PDP_RATIONAL_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>
#include <vector>

namespace pdp {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

class ValidationError : public std::runtime_error {
  public:
    explicit ValidationError(const std::string& what) : std::runtime_error(what) {}
};

class BudgetExceeded : public std::runtime_error {
  public:
    explicit BudgetExceeded(const std::string& what) : std::runtime_error(what) {}
};

inline Int rat_num(const Rat& r) { return boost::multiprecision::numerator(r); }
inline Int rat_den(const Rat& r) { return boost::multiprecision::denominator(r); }

// "p/q" with q > 0 and gcd(p,q) = 1; plain "p" when q == 1.
std::string rat_to_string(const Rat& r);
Rat rat_from_string(const std::string& s);

std::string rat_vector_to_string(const std::vector<Rat>& v);

}  // namespace pdp

#endif
