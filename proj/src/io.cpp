#include "simplexopt/io.hpp"

#include <bit>
#include <cstdio>
#include <cstring>
#include <fstream>
#include <stdexcept>

#include <json.hpp>

namespace simplexopt {

namespace {
constexpr char kB64Alphabet[] = "ABCDEFGHIJKLMNOPQRSTUVWXYZabcdefghijklmnopqrstuvwxyz0123456789+/";
}

std::string base64_encode(const unsigned char* data, std::size_t len) {
    std::string out;
    out.reserve((len + 2) / 3 * 4);
    std::size_t i = 0;
    for (; i + 3 <= len; i += 3) {
        const unsigned v = (data[i] << 16) | (data[i + 1] << 8) | data[i + 2];
        out.push_back(kB64Alphabet[(v >> 18) & 63]);
        out.push_back(kB64Alphabet[(v >> 12) & 63]);
        out.push_back(kB64Alphabet[(v >> 6) & 63]);
        out.push_back(kB64Alphabet[v & 63]);
    }
    const std::size_t rem = len - i;
    if (rem == 1) {
        const unsigned v = data[i] << 16;
        out.push_back(kB64Alphabet[(v >> 18) & 63]);
        out.push_back(kB64Alphabet[(v >> 12) & 63]);
        out.push_back('=');
        out.push_back('=');
    } else if (rem == 2) {
        const unsigned v = (data[i] << 16) | (data[i + 1] << 8);
        out.push_back(kB64Alphabet[(v >> 18) & 63]);
        out.push_back(kB64Alphabet[(v >> 12) & 63]);
        out.push_back(kB64Alphabet[(v >> 6) & 63]);
        out.push_back('=');
    }
    return out;
}

std::string base64_decode(const std::string& text) {
    int table[256];
    std::memset(table, -1, sizeof(table));
    for (int i = 0; i < 64; ++i) table[static_cast<unsigned char>(kB64Alphabet[i])] = i;

    std::string out;
    out.reserve(text.size() / 4 * 3);
    unsigned acc = 0;
    int bits = 0;
    for (char ch : text) {
        if (ch == '=' || ch == '\n' || ch == '\r') continue;
        const int v = table[static_cast<unsigned char>(ch)];
        if (v < 0) throw std::invalid_argument("base64: invalid character");
        acc = (acc << 6) | static_cast<unsigned>(v);
        bits += 6;
        if (bits >= 8) {
            bits -= 8;
            out.push_back(static_cast<char>((acc >> bits) & 0xff));
        }
    }
    return out;
}

std::string doubles_to_base64(const Vec& v) {
    std::string bytes(v.size() * 8, '\0');
    for (std::size_t i = 0; i < v.size(); ++i) {
        const std::uint64_t u = std::bit_cast<std::uint64_t>(v[i]);
        for (int b = 0; b < 8; ++b)
            bytes[i * 8 + static_cast<std::size_t>(b)] =
                static_cast<char>((u >> (8 * b)) & 0xff);  // little-endian
    }
    return base64_encode(reinterpret_cast<const unsigned char*>(bytes.data()), bytes.size());
}

Vec base64_to_doubles(const std::string& text) {
    const std::string bytes = base64_decode(text);
    if (bytes.size() % 8 != 0) throw std::invalid_argument("base64: not a packed double array");
    Vec v(bytes.size() / 8);
    for (std::size_t i = 0; i < v.size(); ++i) {
        std::uint64_t u = 0;
        for (int b = 7; b >= 0; --b)
            u = (u << 8) |
                static_cast<std::uint64_t>(
                    static_cast<unsigned char>(bytes[i * 8 + static_cast<std::size_t>(b)]));
        v[i] = std::bit_cast<double>(u);
    }
    return v;
}

std::string fmt_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

namespace {

nlohmann::json meta_to_json(const ProblemMeta& meta) {
    nlohmann::json j;
    j["generator"] = meta.generator;
    j["seed"] = meta.seed;
    j["rho"] = meta.rho;
    j["theta"] = meta.theta;
    if (meta.planted_x) j["planted_x"] = doubles_to_base64(*meta.planted_x);
    return j;
}

ProblemMeta meta_from_json(const nlohmann::json& j) {
    ProblemMeta meta;
    if (!j.is_object()) return meta;
    meta.generator = j.value("generator", std::string());
    meta.seed = j.value("seed", std::uint64_t{0});
    meta.rho = j.value("rho", 0.0);
    meta.theta = j.value("theta", 0.0);
    if (j.contains("planted_x")) meta.planted_x = base64_to_doubles(j["planted_x"]);
    return meta;
}

void write_json_file(const std::string& path, const nlohmann::json& j) {
    std::ofstream os(path, std::ios::binary);
    if (!os) throw std::runtime_error("cannot open for writing: " + path);
    os << j.dump(2) << '\n';
}

}  // namespace

void save_quadratic(const std::string& path, const QuadraticObjective& obj,
                    const ProblemMeta& meta) {
    nlohmann::json j;
    j["format"] = "simplexopt-problem";
    j["version"] = 1;
    j["kind"] = "quadratic";
    j["n"] = obj.dim();
    j["Q"] = doubles_to_base64(obj.q());
    j["c"] = doubles_to_base64(obj.linear_term());
    j["meta"] = meta_to_json(meta);
    write_json_file(path, j);
}

void save_chebyshev(const std::string& path, const ChebyshevObjective& obj,
                    const ProblemMeta& meta) {
    nlohmann::json j;
    j["format"] = "simplexopt-problem";
    j["version"] = 1;
    j["kind"] = "chebyshev";
    j["m"] = obj.sample_dim();
    j["n"] = obj.dim();
    j["A"] = doubles_to_base64(obj.a());
    j["b"] = doubles_to_base64(obj.b());
    j["meta"] = meta_to_json(meta);
    write_json_file(path, j);
}

LoadedProblem load_problem(const std::string& path) {
    std::ifstream is(path, std::ios::binary);
    if (!is) throw std::runtime_error("cannot open problem file: " + path);
    nlohmann::json j;
    is >> j;
    if (j.value("format", std::string()) != "simplexopt-problem")
        throw std::runtime_error("not a simplexopt problem file: " + path);

    LoadedProblem lp;
    lp.kind = j.at("kind").get<std::string>();
    lp.meta = meta_from_json(j.value("meta", nlohmann::json::object()));
    if (lp.kind == "quadratic") {
        const int n = j.at("n").get<int>();
        Vec q = base64_to_doubles(j.at("Q").get<std::string>());
        Vec c = base64_to_doubles(j.at("c").get<std::string>());
        lp.objective = std::make_shared<QuadraticObjective>(n, std::move(q), std::move(c),
                                                            lp.meta.seed);
    } else if (lp.kind == "chebyshev") {
        const int m = j.at("m").get<int>();
        const int n = j.at("n").get<int>();
        Vec a = base64_to_doubles(j.at("A").get<std::string>());
        Vec b = base64_to_doubles(j.at("b").get<std::string>());
        lp.objective =
            std::make_shared<ChebyshevObjective>(m, n, std::move(a), std::move(b), lp.meta.seed);
    } else {
        throw std::runtime_error("unknown problem kind: " + lp.kind);
    }
    return lp;
}

void write_trace_csv(std::ostream& os, const SolveResult& result) {
    os << "k,f,gap,n_active,epsilon,alpha,step_kind,drop,elapsed_s,evals\n";
    for (const IterationRecord& r : result.trace) {
        os << r.k << ',' << fmt_double(r.f) << ',' << fmt_double(r.gap) << ',' << r.n_active << ','
           << fmt_double(r.epsilon) << ',' << fmt_double(r.alpha) << ',' << step_kind_name(r.step)
           << ',' << (r.drop_step ? 1 : 0) << ',' << fmt_double(r.elapsed_s) << ',' << r.evals
           << '\n';
    }
}

void write_trace_csv_file(const std::string& path, const SolveResult& result) {
    std::ofstream os(path, std::ios::binary);
    if (!os) throw std::runtime_error("cannot open for writing: " + path);
    write_trace_csv(os, result);
}

}  // namespace simplexopt
