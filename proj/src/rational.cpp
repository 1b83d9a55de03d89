#include "pdp/rational.hpp"

#include <sstream>

namespace pdp {

std::string rat_to_string(const Rat& r) {
    std::ostringstream os;
    os << rat_num(r);
    if (rat_den(r) != 1) os << '/' << rat_den(r);
    return os.str();
}

Rat rat_from_string(const std::string& s) {
    if (s.empty()) throw ValidationError("empty rational literal");
    const auto slash = s.find('/');
    try {
        if (slash == std::string::npos) return Rat(Int(s));
        Int num(s.substr(0, slash));
        Int den(s.substr(slash + 1));
        if (den == 0) throw ValidationError("zero denominator in '" + s + "'");
        return Rat(num, den);
    } catch (const std::runtime_error&) {
        throw ValidationError("bad rational literal '" + s + "'");
    }
}

std::string rat_vector_to_string(const std::vector<Rat>& v) {
    std::ostringstream os;
    os << '[';
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) os << ", ";
        os << rat_to_string(v[i]);
    }
    os << ']';
    return os.str();
}

}  // namespace pdp
