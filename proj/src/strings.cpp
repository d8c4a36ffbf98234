#include "aac/strings.hpp"

#include <algorithm>
#include <stdexcept>

#include "aac/errors.hpp"

namespace aac {
namespace {

// Symbols as integer values. Codes use decimal digits when the alphabet
// fits in 10 symbols and comma-separated integers otherwise.
std::vector<int> decode_symbols(const std::string& text, int colors) {
    std::vector<int> out;
    if (text.empty()) throw ParseError("string object must be non-empty");
    if (colors <= 10) {
        out.reserve(text.size());
        for (char ch : text) {
            if (ch < '0' || ch > '9')
                throw ParseError(std::string("invalid symbol '") + ch + "'");
            int v = ch - '0';
            if (v >= colors)
                throw ParseError("symbol " + std::to_string(v) +
                                 " out of range for " + std::to_string(colors) +
                                 " colors");
            out.push_back(v);
        }
        return out;
    }
    std::size_t pos = 0;
    while (pos <= text.size()) {
        auto next = text.find(',', pos);
        std::string tok = text.substr(
            pos, next == std::string::npos ? std::string::npos : next - pos);
        try {
            std::size_t used = 0;
            int v = std::stoi(tok, &used);
            if (used != tok.size() || v < 0) throw std::invalid_argument("");
            if (v >= colors)
                throw ParseError("symbol " + tok + " out of range for " +
                                 std::to_string(colors) + " colors");
            out.push_back(v);
        } catch (const ParseError&) {
            throw;
        } catch (const std::exception&) {
            throw ParseError("malformed symbol \"" + tok + "\"");
        }
        if (next == std::string::npos) break;
        pos = next + 1;
    }
    return out;
}

std::string encode_symbols(const std::vector<int>& symbols, int colors) {
    std::string out;
    if (colors <= 10) {
        out.reserve(symbols.size());
        for (int v : symbols) out.push_back(static_cast<char>('0' + v));
        return out;
    }
    for (std::size_t i = 0; i < symbols.size(); ++i) {
        if (i) out.push_back(',');
        out += std::to_string(symbols[i]);
    }
    return out;
}

std::vector<int> reversed(std::vector<int> s) {
    std::reverse(s.begin(), s.end());
    return s;
}

}  // namespace

StringSpace::StringSpace(int colors, bool directed)
    : colors_(colors), directed_(directed) {
    if (colors < 1) throw std::invalid_argument("alphabet needs >= 1 symbol");
}

std::string StringSpace::id() const {
    return (directed_ ? "sd:" : "su:") + std::to_string(colors_);
}

std::string StringSpace::canonical(std::string s) const {
    if (directed_) return s;
    std::vector<int> sym = decode_symbols(s, colors_);
    std::vector<int> rev = reversed(sym);
    return encode_symbols(std::min(sym, rev), colors_);
}

std::vector<Obj> StringSpace::building_blocks() const {
    std::vector<Obj> out;
    out.reserve(colors_);
    for (int c = 0; c < colors_; ++c) {
        out.push_back(Obj{encode_symbols({c}, colors_), 1});
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Obj> StringSpace::glue(const Obj& a, const Obj& b) const {
    std::vector<int> sa = decode_symbols(a.code, colors_);
    std::vector<int> sb = decode_symbols(b.code, colors_);
    std::vector<std::vector<int>> results;
    auto add_concat = [&](const std::vector<int>& u, const std::vector<int>& v) {
        std::vector<int> s;
        s.reserve(u.size() + v.size());
        s.insert(s.end(), u.begin(), u.end());
        s.insert(s.end(), v.begin(), v.end());
        results.push_back(std::move(s));
    };
    if (directed_) {
        add_concat(sa, sb);
        add_concat(sb, sa);
    } else {
        // Either reading of either operand, in either order.
        std::vector<int> ra = reversed(sa), rb = reversed(sb);
        for (const auto& u : {sa, ra}) {
            for (const auto& v : {sb, rb}) {
                add_concat(u, v);
                add_concat(v, u);
            }
        }
    }
    std::vector<Obj> out;
    for (auto& s : results) {
        if (!directed_) s = std::min(s, reversed(s));
        out.push_back(Obj{encode_symbols(s, colors_), s.size()});
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::vector<std::pair<Obj, Obj>> StringSpace::decompositions(
    const Obj& x) const {
    std::vector<int> sym = decode_symbols(x.code, colors_);
    std::vector<std::pair<Obj, Obj>> out;
    for (std::size_t cut = 1; cut < sym.size(); ++cut) {
        std::vector<int> p(sym.begin(), sym.begin() + cut);
        std::vector<int> q(sym.begin() + cut, sym.end());
        if (!directed_) {
            p = std::min(p, reversed(p));
            q = std::min(q, reversed(q));
        }
        Obj po{encode_symbols(p, colors_), p.size()};
        Obj qo{encode_symbols(q, colors_), q.size()};
        if (qo < po) std::swap(po, qo);
        out.emplace_back(std::move(po), std::move(qo));
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

bool StringSpace::embeds(const Obj& sub, const Obj& host) const {
    std::vector<int> s = decode_symbols(sub.code, colors_);
    std::vector<int> h = decode_symbols(host.code, colors_);
    if (std::search(h.begin(), h.end(), s.begin(), s.end()) != h.end())
        return true;
    if (directed_) return false;
    std::vector<int> r = reversed(s);
    return std::search(h.begin(), h.end(), r.begin(), r.end()) != h.end();
}

Card StringSpace::level_cardinality(std::uint64_t size) const {
    return directed_ ? directed_string_count(colors_, size)
                     : undirected_string_count(colors_, size);
}

std::vector<Obj> StringSpace::enumerate(std::uint64_t size,
                                        std::uint64_t max_count) const {
    if (size == 0) throw std::invalid_argument("size must be >= 1");
    Card total = directed_string_count(colors_, size);
    if (!total.is_exact() || total.value() > max_count) {
        throw BudgetExceeded("string enumeration at size " +
                                 std::to_string(size) + " exceeds budget",
                             0);
    }
    std::vector<Obj> out;
    std::vector<int> sym(size, 0);
    for (;;) {
        if (directed_) {
            out.push_back(Obj{encode_symbols(sym, colors_), size});
        } else {
            // Emit each undirected object once, at its canonical reading.
            if (sym <= reversed(sym))
                out.push_back(Obj{encode_symbols(sym, colors_), size});
        }
        // Odometer increment.
        std::size_t i = size;
        while (i-- > 0) {
            if (++sym[i] < colors_) break;
            sym[i] = 0;
            if (i == 0) {
                std::sort(out.begin(), out.end());
                return out;
            }
        }
    }
}

Obj StringSpace::parse(const std::string& text) const {
    std::vector<int> sym = decode_symbols(text, colors_);
    if (!directed_) sym = std::min(sym, reversed(sym));
    return Obj{encode_symbols(sym, colors_), sym.size()};
}

std::uint64_t StringSpace::size_of(const std::string& text) const {
    return decode_symbols(text, colors_).size();
}

std::string StringSpace::display(const Obj& o) const { return o.code; }

Card directed_string_count(int j, std::uint64_t length) {
    return Card::pow(static_cast<std::uint64_t>(j), length);
}

Card undirected_string_count(int j, std::uint64_t length) {
    Card total = Card::pow(static_cast<std::uint64_t>(j), length);
    Card palin = Card::pow(static_cast<std::uint64_t>(j), (length + 1) / 2);
    return (total + palin).half();
}

}  // namespace aac
