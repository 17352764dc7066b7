#pragma once

#include <cstdint>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "oddhole/graph.hpp"

namespace oddhole {

enum class io_errc {
    truncated,          // input ended before the encoded data did
    invalid_char,       // byte outside the printable 63..126 window
    bad_header,         // malformed or unsupported header line
    bad_vertex_count,   // width/count field out of supported range
    vertex_out_of_range,
    bad_edge,           // self-loop or malformed edge line
    bad_edge_count,     // DIMACS header m disagrees with the edge lines
    trailing_data,
};

class io_error : public std::runtime_error {
  public:
    io_error(io_errc code, const std::string& what)
        : std::runtime_error(what), code_(code) {}
    io_errc code() const { return code_; }

  private:
    io_errc code_;
};

namespace detail {

class BitReader {
  public:
    explicit BitReader(const std::string& data) : data_(data) {}

    int remaining() const {
        return static_cast<int>(data_.size()) * 6 - pos_;
    }

    int read(int bits) {
        int out = 0;
        for (int i = 0; i < bits; ++i) {
            int byte = pos_ / 6, off = pos_ % 6;
            unsigned char c = static_cast<unsigned char>(data_[byte]);
            if (c < 63 || c > 126)
                throw io_error(io_errc::invalid_char, "byte outside graph6 range");
            out = (out << 1) | ((c - 63) >> (5 - off) & 1);
            ++pos_;
        }
        return out;
    }

  private:
    const std::string& data_;
    int pos_ = 0;
};

class BitWriter {
  public:
    void write(int value, int bits) {
        for (int i = bits - 1; i >= 0; --i) push((value >> i) & 1);
    }
    void push(int bit) {
        if (fill_ == 0) bytes_.push_back(0);
        bytes_.back() |= bit << (5 - fill_);
        fill_ = (fill_ + 1) % 6;
    }
    int partial_bits() const { return fill_; }
    std::string finish(int pad_bit = 0) {
        while (fill_ != 0) push(pad_bit);
        std::string out;
        out.reserve(bytes_.size());
        for (int b : bytes_) out.push_back(static_cast<char>(b + 63));
        return out;
    }
    void pad_one(int bit) { push(bit); }

  private:
    std::vector<int> bytes_;
    int fill_ = 0;
};

inline int decode_graph_order(const std::string& s, std::size_t& i) {
    if (i >= s.size()) throw io_error(io_errc::truncated, "missing vertex count");
    unsigned char c = static_cast<unsigned char>(s[i]);
    if (c < 63 || c > 126) throw io_error(io_errc::invalid_char, "bad count byte");
    if (c != 126) {
        ++i;
        return c - 63;
    }
    // 126 prefix: 3-byte (18-bit) count; the 6-byte form is out of scope here
    if (i + 1 < s.size() && static_cast<unsigned char>(s[i + 1]) == 126)
        throw io_error(io_errc::bad_vertex_count, "graphs beyond 2^18 vertices unsupported");
    if (i + 3 >= s.size()) throw io_error(io_errc::truncated, "truncated vertex count");
    int n = 0;
    for (int k = 1; k <= 3; ++k) {
        unsigned char b = static_cast<unsigned char>(s[i + k]);
        if (b < 63 || b > 126) throw io_error(io_errc::invalid_char, "bad count byte");
        n = (n << 6) | (b - 63);
    }
    i += 4;
    return n;
}

inline std::string encode_graph_order(int n) {
    if (n < 0 || n >= (1 << 18))
        throw io_error(io_errc::bad_vertex_count, "vertex count out of range");
    std::string out;
    if (n <= 62) {
        out.push_back(static_cast<char>(n + 63));
    } else {
        out.push_back(126);
        out.push_back(static_cast<char>(((n >> 12) & 63) + 63));
        out.push_back(static_cast<char>(((n >> 6) & 63) + 63));
        out.push_back(static_cast<char>((n & 63) + 63));
    }
    return out;
}

inline int bits_for(int n) {
    int k = 1;
    while ((1 << k) < n) ++k;  // bits needed for n-1
    return k;
}

}  // namespace detail

// ---- graph6 ----------------------------------------------------------------
// N(n) followed by the upper triangle of the adjacency matrix in column order
// x(0,1) x(0,2) x(1,2) x(0,3) ..., packed 6 bits per printable byte.

inline Graph load_graph6(const std::string& line) {
    std::string s = line;
    if (s.rfind(">>graph6<<", 0) == 0) s = s.substr(10);
    std::size_t i = 0;
    int n = detail::decode_graph_order(s, i);
    std::string body = s.substr(i);
    long need = static_cast<long>(n) * (n - 1) / 2;
    long have = static_cast<long>(body.size()) * 6;
    if (have < need) throw io_error(io_errc::truncated, "graph6 body too short");
    if (have - need >= 6) throw io_error(io_errc::trailing_data, "graph6 body too long");
    detail::BitReader br(body);
    std::vector<Edge> edges;
    for (int v = 1; v < n; ++v)
        for (int u = 0; u < v; ++u)
            if (br.read(1)) edges.emplace_back(u, v);
    return Graph::build(n, edges);
}

inline std::string write_graph6(const Graph& g) {
    std::string out = detail::encode_graph_order(g.n());
    detail::BitWriter bw;
    for (int v = 1; v < g.n(); ++v)
        for (int u = 0; u < v; ++u)
            bw.push(g.has_edge(u, v) ? 1 : 0);
    out += bw.finish(0);
    return out;
}

// ---- sparse6 ---------------------------------------------------------------
// ':' N(n) then (b,x) groups, b one bit, x = bits_for(n) bits; padded with 1s.
// When n is a power of two, k+1 or more padding bits are needed, and the
// current vertex stands at n-2, the first pad bit must be 0 so the padding
// cannot decode as a spurious edge.

inline Graph load_sparse6(const std::string& line) {
    std::string s = line;
    if (s.rfind(">>sparse6<<", 0) == 0) s = s.substr(11);
    if (s.empty() || s[0] != ':')
        throw io_error(io_errc::bad_header, "sparse6 line must start with ':'");
    std::size_t i = 1;
    int n = detail::decode_graph_order(s, i);
    std::string body = s.substr(i);
    detail::BitReader br(body);
    int k = detail::bits_for(n < 2 ? 2 : n);
    std::vector<Edge> edges;
    int v = 0;
    while (br.remaining() >= k + 1) {
        int b = br.read(1);
        int x = br.read(k);
        if (b) ++v;
        if (v >= n || x >= n) break;  // padding / terminator
        if (x > v) {
            v = x;
        } else if (x == v) {
            // only legal as trailing padding of an all-ones tail
            if (br.remaining() < 6 && x == n - 1) break;
            throw io_error(io_errc::bad_edge, "sparse6 loop encoded");
        } else {
            edges.emplace_back(x, v);
        }
    }
    return Graph::build(n, edges);
}

inline std::string write_sparse6(const Graph& g) {
    const int n = g.n();
    std::string out = ":" + detail::encode_graph_order(n);
    int k = detail::bits_for(n < 2 ? 2 : n);
    detail::BitWriter bw;
    auto es = g.edges();  // sorted (u,v) with u < v; reorder by (v,u)
    std::sort(es.begin(), es.end(), [](const Edge& a, const Edge& b) {
        return std::pair{a.second, a.first} < std::pair{b.second, b.first};
    });
    int v = 0;
    for (auto [x, w] : es) {
        if (w == v) {
            bw.write(0, 1);
            bw.write(x, k);
        } else if (w == v + 1) {
            v = w;
            bw.write(1, 1);
            bw.write(x, k);
        } else {
            v = w;
            bw.write(1, 1);
            bw.write(w, k);
            bw.write(0, 1);
            bw.write(x, k);
        }
    }
    int pad = (6 - bw.partial_bits()) % 6;
    bool power_of_two = n >= 2 && (n & (n - 1)) == 0;
    if (power_of_two && pad >= k + 1 && v == n - 2) {
        bw.pad_one(0);
    }
    out += bw.finish(1);
    return out;
}

// Dispatch on the ':' prefix so callers can read .g6/.s6 material uniformly.
inline Graph load_graph6_or_sparse6(const std::string& line) {
    std::string s = line;
    if (s.rfind(">>sparse6<<", 0) == 0 || (!s.empty() && s[0] == ':'))
        return load_sparse6(s);
    return load_graph6(s);
}

// ---- DIMACS edge format ----------------------------------------------------
// "c ..." comments, one "p edge <n> <m>" header, then m lines "e <u> <v>"
// with 1-based endpoints.

inline Graph load_dimacs(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int n = -1;
    long m = -1;
    std::vector<Edge> edges;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == 'c') continue;
        std::istringstream ls(line);
        std::string tag;
        ls >> tag;
        if (tag == "p") {
            if (n >= 0) throw io_error(io_errc::bad_header, "duplicate DIMACS header");
            std::string kind;
            if (!(ls >> kind >> n >> m) || (kind != "edge" && kind != "col"))
                throw io_error(io_errc::bad_header, "expected 'p edge <n> <m>'");
            if (n < 0 || m < 0)
                throw io_error(io_errc::bad_vertex_count, "negative DIMACS sizes");
        } else if (tag == "e") {
            if (n < 0) throw io_error(io_errc::bad_header, "edge before DIMACS header");
            long u, v;
            if (!(ls >> u >> v)) throw io_error(io_errc::bad_edge, "malformed edge line");
            if (u < 1 || u > n || v < 1 || v > n)
                throw io_error(io_errc::vertex_out_of_range,
                               "DIMACS endpoint outside 1.." + std::to_string(n));
            if (u == v) throw io_error(io_errc::bad_edge, "DIMACS self-loop");
            edges.emplace_back(static_cast<int>(u - 1), static_cast<int>(v - 1));
        } else if (!tag.empty()) {
            throw io_error(io_errc::bad_header, "unrecognized DIMACS line: " + tag);
        }
    }
    if (n < 0) throw io_error(io_errc::bad_header, "missing DIMACS header");
    if (m >= 0 && m != static_cast<long>(edges.size()))
        throw io_error(io_errc::bad_edge_count, "DIMACS header edge count mismatch");
    return Graph::build(n, edges);
}

}  // namespace oddhole
