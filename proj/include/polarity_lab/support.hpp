#ifndef POLARITY_LAB_SUPPORT_HPP
#define POLARITY_LAB_SUPPORT_HPP

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

namespace plab {

// FNV-1a, 64 bit.  Used for provenance hashes and id-list digests; these are
// file fingerprints, not security hashes.
inline uint64_t fnv1a64(const void* data, size_t len, uint64_t h = 0xcbf29ce484222325ULL) {
    const auto* p = static_cast<const unsigned char*>(data);
    for (size_t i = 0; i < len; ++i) {
        h ^= p[i];
        h *= 0x100000001b3ULL;
    }
    return h;
}

inline uint64_t fnv1a64(const std::string& s) { return fnv1a64(s.data(), s.size()); }

inline uint64_t fnv1a64(const std::vector<uint32_t>& v) {
    return v.empty() ? fnv1a64(nullptr, 0) : fnv1a64(v.data(), v.size() * sizeof(uint32_t));
}

inline std::string hex64(uint64_t h) {
    char buf[19];
    std::snprintf(buf, sizeof(buf), "0x%016llx", static_cast<unsigned long long>(h));
    return buf;
}

// Deterministic PRNG for all sampled checks.  std:: distributions are
// implementation-defined, so sampling goes through this directly.
class SplitMix64 {
  public:
    explicit SplitMix64(uint64_t seed) : state_(seed) {}

    uint64_t next() {
        uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // uniform-ish in [0, bound); bias is irrelevant for sampling duty
    uint64_t below(uint64_t bound) { return bound == 0 ? 0 : next() % bound; }

  private:
    uint64_t state_;
};

inline uint64_t isqrt_u64(uint64_t x) {
    if (x == 0) return 0;
    uint64_t r = static_cast<uint64_t>(std::sqrt(static_cast<double>(x)));
    while (r > 0 && r * r > x) --r;
    while ((r + 1) * (r + 1) <= x) ++r;
    return r;
}

inline bool is_perfect_square(uint64_t x, uint64_t* root = nullptr) {
    uint64_t r = isqrt_u64(x);
    if (root) *root = r;
    return r * r == x;
}

inline bool is_prime_u64(uint64_t p) {
    if (p < 2) return false;
    for (uint64_t d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

inline std::vector<uint64_t> prime_factors(uint64_t n) {
    std::vector<uint64_t> out;
    for (uint64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            out.push_back(d);
            while (n % d == 0) n /= d;
        }
    }
    if (n > 1) out.push_back(n);
    return out;
}

// Splits [0, n) into chunks and runs fn(chunk_index, begin, end) on a worker
// pool.  Callers aggregate per-chunk results in chunk order, so the outcome
// does not depend on the thread count.
template <typename Fn>
void parallel_chunks(uint64_t n, unsigned threads, Fn&& fn) {
    if (threads <= 1 || n < 2) {
        fn(0, uint64_t{0}, n);
        return;
    }
    unsigned workers = std::min<unsigned>(threads, std::max<uint64_t>(1, n));
    uint64_t chunk = (n + workers - 1) / workers;
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < workers; ++t) {
        uint64_t b = t * chunk;
        uint64_t e = std::min(n, b + chunk);
        if (b >= e) break;
        pool.emplace_back([&fn, t, b, e] { fn(t, b, e); });
    }
    for (auto& th : pool) th.join();
}

// Row-major bit matrix; rows are padded to whole 64-bit words so row
// intersections run word-parallel.
class BitMatrix {
  public:
    BitMatrix() = default;
    BitMatrix(uint32_t rows, uint32_t cols)
        : rows_(rows), cols_(cols), words_((cols + 63) / 64), bits_(static_cast<size_t>(rows) * words_, 0) {}

    uint32_t rows() const { return rows_; }
    uint32_t cols() const { return cols_; }
    uint32_t words() const { return words_; }

    void set(uint32_t r, uint32_t c) { bits_[static_cast<size_t>(r) * words_ + (c >> 6)] |= 1ULL << (c & 63); }
    void clear(uint32_t r, uint32_t c) { bits_[static_cast<size_t>(r) * words_ + (c >> 6)] &= ~(1ULL << (c & 63)); }
    bool get(uint32_t r, uint32_t c) const {
        return bits_[static_cast<size_t>(r) * words_ + (c >> 6)] >> (c & 63) & 1;
    }

    const uint64_t* row(uint32_t r) const { return bits_.data() + static_cast<size_t>(r) * words_; }
    uint64_t* row(uint32_t r) { return bits_.data() + static_cast<size_t>(r) * words_; }

    uint32_t row_popcount(uint32_t r) const {
        const uint64_t* w = row(r);
        uint32_t c = 0;
        for (uint32_t i = 0; i < words_; ++i) c += static_cast<uint32_t>(__builtin_popcountll(w[i]));
        return c;
    }

    static uint32_t and_popcount(const uint64_t* a, const uint64_t* b, uint32_t words) {
        uint32_t c = 0;
        for (uint32_t i = 0; i < words; ++i) c += static_cast<uint32_t>(__builtin_popcountll(a[i] & b[i]));
        return c;
    }

    template <typename Fn>
    void for_each_in_row(uint32_t r, Fn&& fn) const {
        const uint64_t* w = row(r);
        for (uint32_t i = 0; i < words_; ++i) {
            uint64_t m = w[i];
            while (m) {
                uint32_t b = static_cast<uint32_t>(__builtin_ctzll(m));
                fn(i * 64 + b);
                m &= m - 1;
            }
        }
    }

  private:
    uint32_t rows_ = 0, cols_ = 0, words_ = 0;
    std::vector<uint64_t> bits_;
};

// Line-oriented "key: value" record, the common serialization for every
// certificate and report file.  Order-preserving; values must be single line.
class Record {
  public:
    explicit Record(std::string kind) : kind_(std::move(kind)) {}

    void add(const std::string& key, const std::string& value) { fields_.emplace_back(key, value); }
    void add(const std::string& key, uint64_t value) { add(key, std::to_string(value)); }
    void add(const std::string& key, int64_t value) { add(key, std::to_string(value)); }
    void add(const std::string& key, int value) { add(key, std::to_string(value)); }
    void add(const std::string& key, bool value) { add(key, std::string(value ? "true" : "false")); }

    const std::string& kind() const { return kind_; }

    std::string get(const std::string& key) const {
        for (const auto& [k, v] : fields_)
            if (k == key) return v;
        throw std::invalid_argument("record: missing key '" + key + "'");
    }

    std::optional<std::string> find(const std::string& key) const {
        for (const auto& [k, v] : fields_)
            if (k == key) return v;
        return std::nullopt;
    }

    const std::vector<std::pair<std::string, std::string>>& fields() const { return fields_; }

    std::string to_text() const {
        std::ostringstream os;
        os << "polarity-lab record v1\n";
        os << "kind: " << kind_ << "\n";
        for (const auto& [k, v] : fields_) os << k << ": " << v << "\n";
        return os.str();
    }

    static Record parse(const std::string& text) {
        std::istringstream is(text);
        std::string line;
        if (!std::getline(is, line) || line != "polarity-lab record v1")
            throw std::invalid_argument("record: bad header");
        if (!std::getline(is, line) || line.rfind("kind: ", 0) != 0)
            throw std::invalid_argument("record: missing kind");
        Record r(line.substr(6));
        while (std::getline(is, line)) {
            if (line.empty()) continue;
            auto pos = line.find(": ");
            if (pos == std::string::npos) throw std::invalid_argument("record: bad line '" + line + "'");
            r.add(line.substr(0, pos), line.substr(pos + 2));
        }
        return r;
    }

  private:
    std::string kind_;
    std::vector<std::pair<std::string, std::string>> fields_;
};

// id lists serialize in full up to this size; above it only the digest is kept
inline constexpr size_t kIdListInlineLimit = 10000;

inline std::string join_ids(const std::vector<uint32_t>& ids) {
    std::ostringstream os;
    for (size_t i = 0; i < ids.size(); ++i) {
        if (i) os << ' ';
        os << ids[i];
    }
    return os.str();
}

inline std::vector<uint32_t> split_ids(const std::string& s) {
    std::vector<uint32_t> out;
    std::istringstream is(s);
    uint64_t v;
    while (is >> v) out.push_back(static_cast<uint32_t>(v));
    return out;
}

// run-length encoding for color maps: "count*value" tokens in id order
inline std::string rle_encode(const std::vector<uint16_t>& vals) {
    std::ostringstream os;
    size_t i = 0;
    bool first = true;
    while (i < vals.size()) {
        size_t j = i;
        while (j < vals.size() && vals[j] == vals[i]) ++j;
        if (!first) os << ' ';
        os << (j - i) << '*' << vals[i];
        first = false;
        i = j;
    }
    return os.str();
}

inline std::vector<uint16_t> rle_decode(const std::string& s) {
    std::vector<uint16_t> out;
    std::istringstream is(s);
    std::string tok;
    while (is >> tok) {
        auto star = tok.find('*');
        if (star == std::string::npos) throw std::invalid_argument("rle: bad token '" + tok + "'");
        uint64_t cnt = std::stoull(tok.substr(0, star));
        uint16_t val = static_cast<uint16_t>(std::stoul(tok.substr(star + 1)));
        out.insert(out.end(), cnt, val);
    }
    return out;
}

}  // namespace plab

#endif  // POLARITY_LAB_SUPPORT_HPP
