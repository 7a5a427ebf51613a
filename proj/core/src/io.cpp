#include "entrovar/io.hpp"

#include <cctype>
#include <cerrno>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <ostream>
#include <sstream>

#include <json.hpp>

namespace entrovar {

namespace {

bool parse_double(const std::string& token, double& out) {
    const char* begin = token.c_str();
    char* end = nullptr;
    errno = 0;
    out = std::strtod(begin, &end);
    if (end == begin || errno == ERANGE) return false;
    while (*end != '\0') {
        if (!std::isspace(static_cast<unsigned char>(*end))) return false;
        ++end;
    }
    return true;
}

std::string trim(const std::string& s) {
    std::size_t a = 0;
    std::size_t b = s.size();
    while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
    while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
    return s.substr(a, b - a);
}

std::vector<double> parse_json_array(const std::string& content) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(content);
    } catch (const nlohmann::json::parse_error& e) {
        throw Error(ErrorKind::ParseError, std::string("invalid JSON: ") + e.what());
    }
    if (!doc.is_array()) {
        throw Error(ErrorKind::ParseError, "JSON input must be an array of numbers");
    }
    std::vector<double> values;
    values.reserve(doc.size());
    for (std::size_t i = 0; i < doc.size(); ++i) {
        if (!doc[i].is_number()) {
            throw Error(ErrorKind::ParseError,
                        "JSON array element " + std::to_string(i) + " is not a number");
        }
        values.push_back(doc[i].get<double>());
    }
    return values;
}

} // namespace

std::vector<double> parse_numeric_vector(const std::string& content) {
    const std::string body = trim(content);
    if (!body.empty() && body.front() == '[') {
        return parse_json_array(body);
    }

    std::vector<double> values;
    std::istringstream in(content);
    std::string line;
    std::size_t line_no = 0;
    bool header_allowed = true;
    while (std::getline(in, line)) {
        ++line_no;
        std::string token = trim(line);
        if (!token.empty() && token.back() == ',') token = trim(token.substr(0, token.size() - 1));
        if (token.empty() || token.front() == '#') continue;
        double v = 0.0;
        if (!parse_double(token, v)) {
            // A single leading non-numeric line is treated as a CSV header.
            if (header_allowed) {
                header_allowed = false;
                continue;
            }
            throw Error(ErrorKind::ParseError,
                        "line " + std::to_string(line_no) + ": not a number: '" + token + "'");
        }
        header_allowed = false;
        values.push_back(v);
    }
    return values;
}

std::string read_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw Error(ErrorKind::IoError, "cannot open '" + path.string() + "'");
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

ProbabilityDistribution load_distribution(const std::filesystem::path& path, bool normalize) {
    return make_distribution(parse_numeric_vector(read_file(path)), normalize);
}

CountHistogram load_histogram(const std::filesystem::path& path) {
    const std::vector<double> values = parse_numeric_vector(read_file(path));
    std::vector<std::int64_t> counts;
    counts.reserve(values.size());
    for (std::size_t i = 0; i < values.size(); ++i) {
        const double v = values[i];
        if (!std::isfinite(v) || v != std::floor(v) || std::abs(v) > 9.0e18) {
            throw Error(ErrorKind::ParseError,
                        "count " + std::to_string(i) + " is not an integer: " +
                            std::to_string(v));
        }
        counts.push_back(static_cast<std::int64_t>(v));
    }
    return make_histogram(counts);
}

std::string format_double(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

void write_values(std::ostream& out, std::span<const double> values) {
    for (double v : values) out << format_double(v) << '\n';
}

void save_distribution(const std::filesystem::path& path, const ProbabilityDistribution& dist) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw Error(ErrorKind::IoError, "cannot write '" + path.string() + "'");
    }
    write_values(out, dist.probs());
}

} // namespace entrovar
