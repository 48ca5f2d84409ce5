#include "orient/config.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace orient::cli {

void ConfigDocument::set(const std::string& key, const std::string& value, int line) {
    for (auto& e : entries_)
        if (e.key == key) throw ParseError("duplicate key '" + key + "'", line, 1);
    entries_.push_back(ConfigEntry{key, value, line});
}

void ConfigDocument::set_matrix(const std::string& name, fgab::IntMatrix m, int line) {
    for (auto& e : matrices_)
        if (e.name == name) throw ParseError("duplicate matrix '" + name + "'", line, 1);
    matrices_.push_back(ConfigMatrix{name, std::move(m), line});
}

bool ConfigDocument::has(const std::string& key) const {
    return get(key).has_value();
}

std::optional<std::string> ConfigDocument::get(const std::string& key) const {
    for (const auto& e : entries_)
        if (e.key == key) return e.value;
    return std::nullopt;
}

const ConfigEntry& ConfigDocument::require(const std::string& key) const {
    for (const auto& e : entries_)
        if (e.key == key) return e;
    throw IncompleteDataError("missing required key '" + key + "'");
}

const ConfigMatrix& ConfigDocument::require_matrix(const std::string& name) const {
    for (const auto& m : matrices_)
        if (m.name == name) return m;
    throw IncompleteDataError("missing required matrix '" + name + "'");
}

std::optional<const ConfigMatrix*> ConfigDocument::get_matrix(const std::string& name) const {
    for (const auto& m : matrices_)
        if (m.name == name) return &m;
    return std::nullopt;
}

bool ConfigDocument::same_content(const ConfigDocument& other) const {
    if (entries_.size() != other.entries_.size() || matrices_.size() != other.matrices_.size())
        return false;
    for (std::size_t i = 0; i < entries_.size(); ++i)
        if (entries_[i].key != other.entries_[i].key ||
            entries_[i].value != other.entries_[i].value)
            return false;
    for (std::size_t i = 0; i < matrices_.size(); ++i)
        if (matrices_[i].name != other.matrices_[i].name ||
            !(matrices_[i].matrix == other.matrices_[i].matrix))
            return false;
    return true;
}

namespace {

std::string trim(const std::string& s) {
    auto begin = s.find_first_not_of(" \t\r");
    if (begin == std::string::npos) return "";
    auto end = s.find_last_not_of(" \t\r");
    return s.substr(begin, end - begin + 1);
}

std::vector<std::string> split_ws(const std::string& s) {
    std::istringstream is(s);
    std::vector<std::string> out;
    std::string tok;
    while (is >> tok) out.push_back(tok);
    return out;
}

bool looks_like_integer(const std::string& tok) {
    if (tok.empty()) return false;
    std::size_t i = (tok[0] == '-' || tok[0] == '+') ? 1 : 0;
    if (i == tok.size()) return false;
    return std::all_of(tok.begin() + long(i), tok.end(),
                       [](char c) { return std::isdigit(static_cast<unsigned char>(c)); });
}

} // namespace

ConfigDocument parse_document(const std::string& text) {
    ConfigDocument doc;
    std::istringstream stream(text);
    std::string raw;
    int line_no = 0;
    while (std::getline(stream, raw)) {
        ++line_no;
        std::string line = raw;
        auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        line = trim(line);
        if (line.empty()) continue;

        auto tokens = split_ws(line);
        if (tokens[0] == "matrix") {
            if (tokens.size() != 4 || !looks_like_integer(tokens[2]) ||
                !looks_like_integer(tokens[3]))
                throw ParseError("expected 'matrix <name> <rows> <cols>'", line_no, 1);
            long rows = parse_small_integer(tokens[2], line_no);
            long cols = parse_small_integer(tokens[3], line_no);
            if (rows < 0 || cols < 0)
                throw ParseError("matrix dimensions must be nonnegative", line_no, 1);
            fgab::IntMatrix m{std::size_t(rows), std::size_t(cols)};
            const int header_line = line_no;
            for (long r = 0; r < rows; ++r) {
                std::string row_line;
                if (!std::getline(stream, row_line))
                    throw ParseError("matrix block ended early", line_no, 1);
                ++line_no;
                auto row_tokens = split_ws(trim(row_line));
                if (long(row_tokens.size()) != cols)
                    throw ParseError("matrix row has " + std::to_string(row_tokens.size()) +
                                         " entries, expected " + std::to_string(cols),
                                     line_no, 1);
                for (long c = 0; c < cols; ++c)
                    m.at(std::size_t(r), std::size_t(c)) =
                        parse_integer(row_tokens[std::size_t(c)], line_no);
            }
            std::string end_line;
            if (!std::getline(stream, end_line) || trim(end_line) != "end")
                throw ParseError("matrix block must close with 'end'", line_no + 1, 1);
            ++line_no;
            doc.set_matrix(tokens[1], std::move(m), header_line);
            continue;
        }

        auto eq = line.find('=');
        if (eq == std::string::npos)
            throw ParseError("expected 'key = value' or a matrix block", line_no, 1);
        std::string key = trim(line.substr(0, eq));
        std::string value = trim(line.substr(eq + 1));
        if (key.empty()) throw ParseError("empty key", line_no, 1);
        doc.set(key, value, line_no);
    }
    return doc;
}

ConfigDocument read_document(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open '" + path + "'", 0, 0);
    std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    return parse_document(text);
}

std::string serialize_document(const ConfigDocument& doc) {
    std::ostringstream os;
    for (const auto& e : doc.entries()) os << e.key << " = " << e.value << "\n";
    for (const auto& m : doc.matrices()) {
        os << "matrix " << m.name << " " << m.matrix.rows() << " " << m.matrix.cols() << "\n";
        for (std::size_t r = 0; r < m.matrix.rows(); ++r) {
            for (std::size_t c = 0; c < m.matrix.cols(); ++c) {
                if (c) os << " ";
                os << m.matrix.at(r, c).get_str();
            }
            os << "\n";
        }
        os << "end\n";
    }
    return os.str();
}

mpz_class parse_integer(const std::string& value, int line) {
    if (!looks_like_integer(value))
        throw ParseError("expected an integer, got '" + value + "'", line, 1);
    return mpz_class(value);
}

long parse_small_integer(const std::string& value, int line) {
    mpz_class v = parse_integer(value, line);
    if (!v.fits_slong_p()) throw ParseError("integer '" + value + "' is too large here", line, 1);
    return v.get_si();
}

std::vector<mpz_class> parse_integer_list(const std::string& value, int line) {
    std::vector<mpz_class> out;
    for (const auto& tok : split_ws(value)) out.push_back(parse_integer(tok, line));
    return out;
}

int parse_sign(const std::string& value, int line) {
    if (value == "+" || value == "+1" || value == "1") return +1;
    if (value == "-" || value == "-1") return -1;
    throw ParseError("expected a sign (+ or -), got '" + value + "'", line, 1);
}

std::vector<int> parse_sign_list(const std::string& value, int line) {
    std::vector<int> out;
    for (const auto& tok : split_ws(value)) out.push_back(parse_sign(tok, line));
    return out;
}

} // namespace orient::cli
