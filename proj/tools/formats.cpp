#include "formats.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

namespace rkl::io {

namespace {

// Non-blank, comment-stripped lines with their 1-based line numbers.
struct Line {
    std::size_t number;
    std::vector<std::string_view> fields;
};

class LineReader {
public:
    explicit LineReader(std::istream& in) : in_(in) {}

    bool next(Line& line) {
        while (std::getline(in_, buf_)) {
            ++number_;
            std::string_view v(buf_);
            if (auto hash = v.find('#'); hash != std::string_view::npos) v = v.substr(0, hash);
            line.fields.clear();
            std::size_t i = 0;
            while (i < v.size()) {
                while (i < v.size() && (v[i] == ' ' || v[i] == '\t' || v[i] == '\r')) ++i;
                std::size_t j = i;
                while (j < v.size() && v[j] != ' ' && v[j] != '\t' && v[j] != '\r') ++j;
                if (j > i) line.fields.push_back(v.substr(i, j - i));
                i = j;
            }
            if (!line.fields.empty()) {
                line.number = number_;
                return true;
            }
        }
        return false;
    }

private:
    std::istream& in_;
    std::string buf_;
    std::size_t number_ = 0;
};

Nat to_nat(std::string_view s, std::size_t line) {
    Nat v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || ptr != s.data() + s.size())
        throw ParseError("expected a natural number, got '" + std::string(s) + "'", line);
    return v;
}

void expect_fields(const Line& l, std::size_t count, const char* shape) {
    if (l.fields.size() != count)
        throw ParseError(std::string("expected '") + shape + "'", l.number);
}

BitString to_bits(std::string_view s, std::size_t line) {
    try {
        return BitString::parse(s);
    } catch (const ParseError& e) {
        throw ParseError(e.what(), line);
    }
}

std::set<BitString> read_strings(std::istream& in) {
    std::set<BitString> out;
    LineReader reader(in);
    Line l;
    while (reader.next(l)) {
        expect_fields(l, 1, "<bits>");
        out.insert(to_bits(l.fields[0], l.number));
    }
    return out;
}

void write_strings(std::ostream& out, const std::set<BitString>& strings) {
    for (const auto& s : strings) out << (s.empty() ? "-" : s.str()) << '\n';
}

} // namespace

FinTree read_tree(std::istream& in, bool close) {
    auto strings = read_strings(in);
    return close ? FinTree::close(strings) : FinTree::validate(std::move(strings));
}

StringFamily read_family(std::istream& in) { return StringFamily(read_strings(in)); }

PairColoring read_coloring(std::istream& in) {
    LineReader reader(in);
    Line l;
    if (!reader.next(l)) throw ParseError("missing 'n <N>' header", 0);
    if (l.fields.size() != 2 || l.fields[0] != "n") throw ParseError("expected 'n <N>' header", l.number);
    const Nat n = to_nat(l.fields[1], l.number);
    if (n > 4096) throw ParseError("coloring horizon too large", l.number);
    PairColoring f(n);
    std::vector<bool> seen(f.pair_count(), false);
    Nat count = 0;
    while (reader.next(l)) {
        expect_fields(l, 3, "x y c");
        Nat x = to_nat(l.fields[0], l.number);
        Nat y = to_nat(l.fields[1], l.number);
        Nat c = to_nat(l.fields[2], l.number);
        if (!(x < y && y <= n)) throw ParseError("pair outside 0 <= x < y <= n", l.number);
        if (c > 1) throw ParseError("color must be 0 or 1", l.number);
        Nat idx = y * (y - 1) / 2 + x;
        if (seen[idx]) throw ParseError("pair listed twice", l.number);
        seen[idx] = true;
        ++count;
        f.set(x, y, to_color(static_cast<int>(c)));
    }
    if (count != f.pair_count()) {
        for (Nat y = 1; y <= n; ++y)
            for (Nat x = 0; x < y; ++x)
                if (!seen[y * (y - 1) / 2 + x])
                    throw ParseError("missing pair " + std::to_string(x) + " " + std::to_string(y), 0);
    }
    return f;
}

StagedEnum read_enum(std::istream& in) {
    std::vector<EnumEvent> events;
    LineReader reader(in);
    Line l;
    while (reader.next(l)) {
        expect_fields(l, 3, "e s x");
        EnumEvent ev{to_nat(l.fields[0], l.number), to_nat(l.fields[1], l.number),
                     to_nat(l.fields[2], l.number)};
        if (ev.stage == 0) throw ParseError("stage must be >= 1", l.number);
        events.push_back(ev);
    }
    try {
        return StagedEnum(std::move(events));
    } catch (const InvalidArgument& e) {
        throw ParseError(e.what(), 0);
    }
}

NatSet read_set(std::istream& in) {
    std::vector<Nat> out;
    LineReader reader(in);
    Line l;
    while (reader.next(l)) {
        expect_fields(l, 1, "<natural>");
        Nat v = to_nat(l.fields[0], l.number);
        if (!out.empty() && v <= out.back()) throw ParseError("set must be strictly increasing", l.number);
        out.push_back(v);
    }
    return NatSet(std::move(out));
}

std::vector<StageEntry> read_stages(std::istream& in) {
    std::vector<StageEntry> out;
    LineReader reader(in);
    Line l;
    while (reader.next(l)) {
        expect_fields(l, 2, "s <bits>");
        out.push_back({to_nat(l.fields[0], l.number), to_bits(l.fields[1], l.number)});
    }
    return out;
}

void write_tree(std::ostream& out, const FinTree& t) { write_strings(out, t.members()); }

void write_family(std::ostream& out, const StringFamily& f) { write_strings(out, f.members()); }

void write_coloring(std::ostream& out, const PairColoring& f) {
    out << "n " << f.n() << '\n';
    for (Nat y = 1; y <= f.n(); ++y)
        for (Nat x = 0; x < y; ++x) out << x << ' ' << y << ' ' << to_int(f(x, y)) << '\n';
}

void write_enum(std::ostream& out, const StagedEnum& e) {
    for (const auto& ev : e.events()) out << ev.e << ' ' << ev.stage << ' ' << ev.x << '\n';
}

void write_set(std::ostream& out, const NatSet& s) {
    for (Nat x : s) out << x << '\n';
}

void write_stages(std::ostream& out, const std::vector<StageEntry>& entries) {
    auto sorted = entries;
    std::stable_sort(sorted.begin(), sorted.end(),
                     [](const StageEntry& a, const StageEntry& b) { return a.stage < b.stage; });
    for (const auto& en : sorted) out << en.stage << ' ' << (en.tau.empty() ? "-" : en.tau.str()) << '\n';
}

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open " + path, 0);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

} // namespace rkl::io
