#include "core/truth_table.hpp"

#include <fstream>
#include <sstream>

#include "support/bits.hpp"

namespace bf {

TruthTable::TruthTable(int n, int fill_bit) : n_(n) {
    if (n < 1) throw ArgumentError("TruthTable: n must be >= 1");
    if (n > kMaxVars) throw CapacityError("TruthTable: n exceeds the 26-variable cap");
    uint64_t words = (size() + 63) >> 6;
    w_.assign(words, fill_bit ? ~0ull : 0ull);
    if (fill_bit && n_ < 6) w_[0] = (1ull << size()) - 1;
}

TruthTable TruthTable::parity_fn(int n) {
    TruthTable t(n);
    for (uint64_t i = 0; i < t.size(); ++i)
        if (popcount64(i) & 1) t.set(i, 1);
    return t;
}

TruthTable TruthTable::and_fn(int n) {
    TruthTable t(n);
    t.set(t.size() - 1, 1);
    return t;
}

TruthTable TruthTable::maj3() {
    return from_u64(3, 0b11101000);  // 1 at 011,101,110,111
}

TruthTable TruthTable::from_u64(int n, uint64_t bits) {
    if (n < 1 || n > 6) throw ArgumentError("from_u64: need 1 <= n <= 6");
    TruthTable t(n);
    uint64_t mask = (n == 6) ? ~0ull : ((1ull << (1 << n)) - 1);
    t.w_[0] = bits & mask;
    return t;
}

uint64_t TruthTable::weight() const {
    uint64_t w = 0;
    for (uint64_t word : w_) w += (uint64_t)popcount64(word);
    return w;
}

TruthTable TruthTable::dual() const {
    TruthTable r = *this;
    for (uint64_t i = 0; i < size(); ++i)
        if (popcount64(i) & 1) r.flip(i);
    return r;
}

TruthTable TruthTable::complement() const {
    TruthTable r = *this;
    for (auto& word : r.w_) word = ~word;
    if (n_ < 6) r.w_[0] &= (1ull << size()) - 1;
    return r;
}

TruthTable TruthTable::operator^(const TruthTable& o) const {
    if (o.n_ != n_) throw ArgumentError("xor: variable counts differ");
    TruthTable r = *this;
    for (size_t i = 0; i < w_.size(); ++i) r.w_[i] ^= o.w_[i];
    return r;
}

uint64_t TruthTable::as_u64() const {
    if (n_ > 6) throw ArgumentError("as_u64: table wider than 64 bits");
    return w_[0];
}

std::string TruthTable::to_hex() const {
    static const char* digits = "0123456789abcdef";
    uint64_t nbytes = (size() + 7) >> 3;
    std::string s;
    s.reserve(nbytes * 2);
    for (uint64_t b = 0; b < nbytes; ++b) {
        unsigned byte = (unsigned)((w_[b >> 3] >> ((b & 7) * 8)) & 0xff);
        s.push_back(digits[byte >> 4]);
        s.push_back(digits[byte & 0xf]);
    }
    return s;
}

namespace {
int hex_val(char c) {
    if (c >= '0' && c <= '9') return c - '0';
    if (c >= 'a' && c <= 'f') return c - 'a' + 10;
    if (c >= 'A' && c <= 'F') return c - 'A' + 10;
    return -1;
}
}  // namespace

TruthTable TruthTable::from_hex(int n, std::string_view hex) {
    TruthTable t(n);
    uint64_t nbytes = (t.size() + 7) >> 3;
    if (hex.size() != nbytes * 2)
        throw ParseError("truth table hex: expected " + std::to_string(nbytes * 2) +
                         " digits, got " + std::to_string(hex.size()));
    for (uint64_t b = 0; b < nbytes; ++b) {
        int hi = hex_val(hex[b * 2]), lo = hex_val(hex[b * 2 + 1]);
        if (hi < 0 || lo < 0) throw ParseError("truth table hex: invalid digit");
        uint64_t byte = (uint64_t)((hi << 4) | lo);
        t.w_[b >> 3] |= byte << ((b & 7) * 8);
    }
    if (n < 3) {
        uint64_t mask = (1ull << t.size()) - 1;
        if (t.w_[0] & ~mask) throw ParseError("truth table hex: nonzero padding bits");
    }
    return t;
}

std::string TruthTable::to_text() const {
    return "n=" + std::to_string(n_) + "\n" + to_hex() + "\n";
}

TruthTable TruthTable::parse_text(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string header, hex;
    if (!std::getline(in, header) || header.rfind("n=", 0) != 0)
        throw ParseError("truth table: missing n=<k> header");
    int n = 0;
    try {
        n = std::stoi(header.substr(2));
    } catch (const std::exception&) {
        throw ParseError("truth table: bad variable count in header");
    }
    if (n < 1 || n > kMaxVars) throw ParseError("truth table: variable count out of range");
    if (!std::getline(in, hex)) throw ParseError("truth table: missing hex line");
    while (!hex.empty() && (hex.back() == '\r' || hex.back() == ' ')) hex.pop_back();
    return from_hex(n, hex);
}

TruthTable TruthTable::read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_text(ss.str());
}

void TruthTable::write_file(const std::string& path) const {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot write " + path);
    out << to_text();
}

}  // namespace bf
