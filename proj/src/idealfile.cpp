#include "coneinf/idealfile.hpp"

#include <fstream>
#include <sstream>

#include "coneinf/errors.hpp"
#include "coneinf/parser.hpp"

namespace coneinf {

namespace {

std::string trim(const std::string& s) {
    std::size_t b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return "";
    std::size_t e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

[[noreturn]] void fail(const std::string& file, std::size_t line, std::size_t column,
                       const std::string& msg) {
    throw std::runtime_error(file + ": line " + std::to_string(line) + ", column " +
                             std::to_string(column) + ": " + msg);
}

} // namespace

IdealFile parse_ideal_file(std::istream& in, const std::string& display_name) {
    IdealFile result;
    result.name = display_name;
    ContextPtr ctx;
    std::vector<Polynomial> gens;

    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::string stripped = trim(line);
        if (stripped.empty() || stripped.front() == '#') continue;
        std::size_t colon = stripped.find(':');
        if (colon == std::string::npos)
            fail(display_name, lineno, 1, "expected 'key: value', got '" + stripped + "'");
        std::string key = trim(stripped.substr(0, colon));
        std::string value = trim(stripped.substr(colon + 1));
        std::size_t value_column = line.find(':') + 2;

        if (key == "vars") {
            if (ctx) fail(display_name, lineno, 1, "duplicate vars line");
            std::istringstream words(value);
            std::vector<std::string> names;
            std::string w;
            while (words >> w) names.push_back(w);
            if (names.empty()) fail(display_name, lineno, value_column, "no variables listed");
            try {
                ctx = make_context(std::move(names));
            } catch (const std::exception& e) {
                fail(display_name, lineno, value_column, e.what());
            }
        } else if (key == "p") {
            if (!ctx) fail(display_name, lineno, 1, "vars line must come before generators");
            try {
                gens.push_back(parse_polynomial(value, ctx));
            } catch (const parse_error& e) {
                fail(display_name, lineno, value_column + e.position(), e.what());
            }
            result.sources.push_back(value);
        } else if (key == "name") {
            result.name = value;
        } else if (key.find_first_of(" \t") == std::string::npos && !key.empty()) {
            result.metadata[key] = value;
        } else {
            fail(display_name, lineno, 1, "malformed line '" + stripped + "'");
        }
    }
    if (!ctx) fail(display_name, lineno + 1, 1, "missing vars line");
    if (gens.empty()) fail(display_name, lineno + 1, 1, "no generators given");
    result.ideal = Ideal(ctx, std::move(gens));
    return result;
}

IdealFile load_ideal_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("file not found: " + path);
    return parse_ideal_file(in, path);
}

} // namespace coneinf
