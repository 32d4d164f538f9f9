/**
 * JSON documents for groups, homs, chain complexes, crossed complexes and
 * cubical bundles.
 *
 *   group   {kind, generators, relations}            relations: generators rows
 *   hom     {kind, source, target, matrix}           matrix: target rows
 *   chain   {kind, groups, boundaries: {"n": matrix}}
 *   crossed {kind, C0, levels: [{group, d0, d1, eps}, {group, p, eps, delta}, ...]}
 *   bundle  {kind, N, groups, ops: {key: matrix}}
 *
 * Matrices are row-major arrays of rows. Entries may be JSON integers or
 * decimal strings on input and are always written as strings. Nested
 * groups may omit their kind. Unknown fields are rejected.
 */

#ifndef CUBAB_DOCUMENT_HPP
#define CUBAB_DOCUMENT_HPP

#include <stdexcept>
#include <string>
#include <variant>

#include "cubab/chain.hpp"
#include "cubab/crossed.hpp"
#include "cubab/cubical.hpp"
#include "cubab/group.hpp"

namespace cubab {

/// Syntax or schema error; the message carries a byte offset or a JSON pointer.
class DocumentError : public std::runtime_error
{
    public:
        using std::runtime_error::runtime_error;
};

struct Document
{
    std::variant<FGAbGroup, FGAbHom, ChainComplex, InternalCrossedComplex, CubicalBundle> payload;

    std::string kind() const;
};

Document parse_document(const std::string& text);

/// Canonical text: fixed key order, two-space indentation, trailing newline.
std::string serialize_document(const Document& doc);

/// A bare JSON array of rows, or a hom document whose matrix is taken.
IntMatrix parse_matrix_document(const std::string& text);

}   // namespace cubab

#endif
