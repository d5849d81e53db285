#pragma once

#include <string>

#include "permpos/matrix.hpp"
#include "permpos/numcheck.hpp"

namespace permpos {

// JSON schemas (whitespace-insensitive, decimal numbers):
//   DMatrix:   {"n": int, "d": [[...]]}
//   Hermitian: {"n": int, "re": [[...]], "im": [[...]]}
//   Evidence:  {"max_found": float, "witness": [...], "starts": int,
//               "seed": int, "verdict": string}

std::string dmatrix_to_json(const DMatrix& d);
DMatrix dmatrix_from_json(const std::string& text);
DMatrix dmatrix_from_file(const std::string& path);

std::string hermitian_to_json(const HermitianMatrix& h);
HermitianMatrix hermitian_from_json(const std::string& text);
HermitianMatrix hermitian_from_file(const std::string& path);

std::string evidence_to_json(const SearchEvidence& evidence, VerdictKind kind);

}  // namespace permpos
