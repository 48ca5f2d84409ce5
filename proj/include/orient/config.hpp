#pragma once

#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "orient/errors.hpp"
#include "orient/fgab.hpp"

namespace orient::cli {

// Flat key/value + matrix-block text format:
//
//   # comment
//   key = value
//   matrix <name> <rows> <cols>
//   1 2
//   3 4
//   end
//
// Keys are unique; integers are decimal strings of unbounded size. The same
// format serves as the structured output, so results re-parse as documents.
struct ConfigEntry {
    std::string key;
    std::string value;
    int line = 0;
};

struct ConfigMatrix {
    std::string name;
    fgab::IntMatrix matrix;
    int line = 0;
};

class ConfigDocument {
public:
    void set(const std::string& key, const std::string& value, int line = 0);
    void set_matrix(const std::string& name, fgab::IntMatrix m, int line = 0);

    bool has(const std::string& key) const;
    std::optional<std::string> get(const std::string& key) const;
    // Throws IncompleteDataError when the key is missing.
    const ConfigEntry& require(const std::string& key) const;
    const ConfigMatrix& require_matrix(const std::string& name) const;
    std::optional<const ConfigMatrix*> get_matrix(const std::string& name) const;

    const std::vector<ConfigEntry>& entries() const { return entries_; }
    const std::vector<ConfigMatrix>& matrices() const { return matrices_; }

    // Equality of content: keys, values, matrix names and entries, in order.
    bool same_content(const ConfigDocument& other) const;

private:
    std::vector<ConfigEntry> entries_;
    std::vector<ConfigMatrix> matrices_;
};

ConfigDocument parse_document(const std::string& text);
ConfigDocument read_document(const std::string& path); // throws on I/O failure
std::string serialize_document(const ConfigDocument& doc);

// Value helpers; errors cite the entry's line.
mpz_class parse_integer(const std::string& value, int line);
long parse_small_integer(const std::string& value, int line);
std::vector<mpz_class> parse_integer_list(const std::string& value, int line);
int parse_sign(const std::string& value, int line); // "+", "-", "+1", "-1"
std::vector<int> parse_sign_list(const std::string& value, int line);

} // namespace orient::cli
