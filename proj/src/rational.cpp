#include "exobasis/rational.hpp"

namespace exobasis {

Rat rat_parse(const std::string& text) {
    if (text.empty()) throw InputError("empty rational literal");
    const auto slash = text.find('/');
    try {
        if (slash == std::string::npos) {
            mpz_class p(text);
            return Rat(p);
        }
        mpz_class p(text.substr(0, slash));
        mpz_class q(text.substr(slash + 1));
        if (q == 0) throw InputError("rational literal with zero denominator: " + text);
        Rat r(p, q);
        r.canonicalize();
        return r;
    } catch (const std::invalid_argument&) {
        throw InputError("malformed rational literal: " + text);
    }
}

std::string rat_str(const Rat& q) {
    if (q.get_den() == 1) return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

} // namespace exobasis
