#include "pvi/rational.hpp"

namespace pvi {

Rational rational_from_string(const std::string &s) {
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) return Rational(Integer(s));
        Integer num(s.substr(0, slash));
        Integer den(s.substr(slash + 1));
        return make_rational(num, den);
    } catch (const std::invalid_argument &) {
        throw math_error("cannot parse rational: \"" + s + "\"");
    }
}

std::string rational_to_string(const Rational &q) {
    if (q.get_den() == 1) return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

} // namespace pvi
