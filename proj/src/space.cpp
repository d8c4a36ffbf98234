#include "aac/space.hpp"

#include <stdexcept>

#include "aac/card.hpp"
#include "aac/errors.hpp"
#include "aac/graphs.hpp"
#include "aac/polyominoes.hpp"
#include "aac/strings.hpp"

namespace aac {

Card Card::exact(std::uint64_t v) {
    if (v >= kCap) return saturated();
    return Card(v);
}

Card Card::operator+(Card o) const {
    if (is_unknown() || o.is_unknown()) return unknown();
    if (is_saturated() || o.is_saturated()) return saturated();
    if (v_ + o.v_ < v_ || v_ + o.v_ >= kCap) return saturated();
    return Card(v_ + o.v_);
}

Card Card::operator*(Card o) const {
    if (is_unknown() || o.is_unknown()) return unknown();
    if (v_ == 0 || o.v_ == 0) return Card(0);
    if (is_saturated() || o.is_saturated()) return saturated();
    if (v_ > (kCap - 1) / o.v_) return saturated();
    return Card(v_ * o.v_);
}

Card Card::half() const {
    if (!is_exact()) return *this;
    return Card(v_ / 2);
}

Card Card::pow(std::uint64_t base, std::uint64_t exp) {
    Card r = Card::exact(1);
    Card b = Card::exact(base);
    while (exp > 0) {
        if (exp & 1) r = r * b;
        b = b * b;
        exp >>= 1;
    }
    return r;
}

std::uint64_t min_with(std::uint64_t a, Card c) {
    if (c.is_unknown())
        throw std::invalid_argument("cardinality unknown; cannot take min");
    if (c.is_saturated()) return a;
    return a < c.v_ ? a : c.v_;
}

bool covers(std::uint64_t a, Card c) {
    if (c.is_unknown())
        throw std::invalid_argument("cardinality unknown; cannot compare");
    if (c.is_saturated()) return a >= Card::kCap;
    return a >= c.v_;
}

std::string Card::to_string() const {
    if (is_unknown()) return "unknown";
    if (is_saturated()) return ">=" + std::to_string(kCap);
    return std::to_string(v_);
}

std::uint64_t Space::size_of(const std::string& text) const {
    return parse(text).size;
}

std::unique_ptr<Space> make_space(const std::string& id) {
    auto colon = id.find(':');
    if (colon == std::string::npos || colon + 1 >= id.size())
        throw ParseError("space id must look like \"sd:2\", \"su:3\", \"g:2\", or \"p:1\": " + id);
    std::string kind = id.substr(0, colon);
    int param = 0;
    try {
        std::size_t used = 0;
        param = std::stoi(id.substr(colon + 1), &used);
        if (used != id.size() - colon - 1) throw std::invalid_argument("");
    } catch (const std::exception&) {
        throw ParseError("space id has a malformed parameter: " + id);
    }
    if (param < 1) throw ParseError("space parameter must be >= 1: " + id);
    if (kind == "sd") return std::make_unique<StringSpace>(param, true);
    if (kind == "su") return std::make_unique<StringSpace>(param, false);
    if (kind == "g") return std::make_unique<GraphSpace>(param);
    if (kind == "p") return std::make_unique<PolyominoSpace>(param);
    throw ParseError("unknown space kind \"" + kind + "\" in id: " + id);
}

}  // namespace aac
