#include "ddimer/rational.hpp"

#include <cctype>

namespace ddimer {

Rat parse_rational(const std::string& text) {
    if (text.empty()) throw Error("empty rational");
    size_t i = 0;
    auto digits = [&](size_t from) {
        size_t j = from;
        while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
        return j;
    };
    if (text[i] == '-') ++i;
    size_t num_end = digits(i);
    if (num_end == i) throw Error("bad rational '" + text + "'");
    if (num_end == text.size()) return Rat(Int(text));
    if (text[num_end] != '/') throw Error("bad rational '" + text + "'");
    size_t den_begin = num_end + 1;
    size_t den_end = digits(den_begin);
    if (den_end == den_begin || den_end != text.size())
        throw Error("bad rational '" + text + "'");
    Int num(text.substr(0, num_end));
    Int den(text.substr(den_begin));
    if (den == 0) throw Error("zero denominator in '" + text + "'");
    Rat r(num, den);
    r.canonicalize();
    return r;
}

std::string rat_str(const Rat& r) { return r.get_str(); }

}  // namespace ddimer
