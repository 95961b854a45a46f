#include "trimcx/io.hpp"

#include "trimcx/errors.hpp"

#include <fstream>
#include <istream>
#include <optional>
#include <ostream>
#include <sstream>

namespace trimcx {

namespace {

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return {};
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

// Next meaningful line, or nullopt at end of input.
std::optional<std::string> next_line(std::istream& in, int& lineno) {
    std::string line;
    while (std::getline(in, line)) {
        ++lineno;
        line = trim(line);
        if (!line.empty() && line[0] != '#') return line;
    }
    return std::nullopt;
}

std::string where(int lineno) { return "line " + std::to_string(lineno) + ": "; }

void read_header(std::istream& in, int& lineno) {
    const auto header = next_line(in, lineno);
    if (!header) throw InputError("empty input: expected 'char <p>'");
    std::istringstream ss(*header);
    std::string key;
    long long p = 0;
    if (!(ss >> key >> p) || key != "char" || !(ss >> std::ws).eof())
        throw InputError(where(lineno) + "expected 'char <p>'");
    if (p <= 2 || p >= (1LL << 31) || !is_prime(static_cast<std::uint64_t>(p)))
        throw InputError(where(lineno) + "characteristic must be an odd prime below 2^31");
    Scalar::set_characteristic(static_cast<Scalar::rep>(p));
}

HomogPoly parse_at(const std::string& text, int lineno, int zero_degree = 0) {
    try {
        return parse_homog(text, zero_degree);
    } catch (const InputError& e) {
        throw InputError(where(lineno) + e.what());
    }
}

std::ofstream open_out(const std::string& path) {
    std::ofstream out(path);
    if (!out) throw InputError("cannot write " + path);
    return out;
}

} // namespace

Ideal read_ideal(std::istream& in) {
    int lineno = 0;
    read_header(in, lineno);
    std::vector<HomogPoly> gens;
    while (const auto line = next_line(in, lineno)) {
        HomogPoly g = parse_at(*line, lineno);
        if (!g.is_zero()) gens.push_back(std::move(g));
    }
    return Ideal(std::move(gens));
}

Ideal read_ideal_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot read " + path);
    return read_ideal(in);
}

void write_ideal(std::ostream& out, const Ideal& ideal) {
    out << "char " << Scalar::characteristic() << '\n';
    for (const auto& g : ideal.generators()) out << to_string(g) << '\n';
}

void write_ideal_file(const std::string& path, const Ideal& ideal) {
    auto out = open_out(path);
    write_ideal(out, ideal);
}

SkewMatrix read_skew(std::istream& in) {
    int lineno = 0;
    read_header(in, lineno);
    const auto size_line = next_line(in, lineno);
    std::istringstream ss(size_line.value_or(""));
    std::string key;
    int n = 0;
    if (!(ss >> key >> n) || key != "skew" || n < 1) throw InputError(where(lineno) + "expected 'skew <n>'");
    PolyMatrix m;
    for (int i = 0; i < n; ++i) {
        const auto line = next_line(in, lineno);
        if (!line) throw InputError("skew matrix: expected " + std::to_string(n) + " rows");
        std::vector<HomogPoly> row;
        std::istringstream cells(*line);
        std::string cell;
        while (std::getline(cells, cell, ',')) row.push_back(parse_at(trim(cell), lineno));
        if (static_cast<int>(row.size()) != n) throw InputError(where(lineno) + "wrong number of entries");
        m.push_back(std::move(row));
    }
    try {
        return SkewMatrix(std::move(m));
    } catch (const PreconditionError& e) {
        throw InputError(e.what());
    }
}

void write_skew(std::ostream& out, const SkewMatrix& m) {
    out << "char " << Scalar::characteristic() << '\n' << "skew " << m.size() << '\n';
    for (int i = 0; i < m.size(); ++i) {
        for (int j = 0; j < m.size(); ++j) out << (j ? ", " : "") << to_string(m(i, j));
        out << '\n';
    }
}

nlohmann::json to_json(const BettiTable& b) {
    nlohmann::json entries = nlohmann::json::array();
    for (const auto& [key, v] : b.entries()) entries.push_back({{"i", key.first}, {"j", key.second}, {"rank", v}});
    return {{"betti", entries}, {"totals", b.totals()}};
}

nlohmann::json to_json(const Ideal& ideal) {
    nlohmann::json gens = nlohmann::json::array();
    for (const auto& g : ideal.generators()) gens.push_back(to_string(g));
    return {{"char", Scalar::characteristic()}, {"generators", gens}};
}

} // namespace trimcx
