#ifndef FREEDIST_CODEFILE_HPP
#define FREEDIST_CODEFILE_HPP

#include <iosfwd>
#include <string>

#include "freedist/legacy.hpp"
#include "freedist/polymat.hpp"

namespace freedist {

/// A parsed code file: the generator matrix plus an optional id (defaults to
/// the file stem when loaded from disk).
struct CodeFile {
    std::string id;
    GeneratorMatrix G;
};

/// Parses {"field": {"p", "m", "modulus"?}, "generator": [[[c0,c1,...],...],...],
/// "id"?}. Coefficients are integers in [0, q), low -> high. Throws
/// ParseError on malformed input (with byte position for JSON syntax
/// errors) and the usual semantic errors for invalid fields or matrices.
CodeFile parse_code(const std::string& text, const std::string& fallback_id = "");
CodeFile load_code(const std::string& path);

std::string code_to_json(const CodeFile& code);
void save_code(const CodeFile& code, const std::string& path);

/// Parses {"vertices": [...], "zero": "...", "edges": [[from,to,weight],...]}.
WeightedDigraph parse_graph(const std::string& text);
WeightedDigraph load_graph(const std::string& path);

}  // namespace freedist

#endif
