#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "cpcq/model.hpp"

namespace cpcq {

// Model files are JSON documents:
//
//   {
//     "name": "optional label",
//     "dimension": 2,
//     "commands": ["0", "01"],
//     "states":     { "<command>": [[re, im], ...] },
//     "unitaries":  { "<command>": [[[re, im], ...], ...] },        row-major
//     "observables":{ "<command>": { "eigenvalues": [m0, m1, ...],
//                                    "projectors":  [<matrix>, ...] } },
//     "durations":     { "<command>": seconds },                     optional
//     "factorization": { "<command>": { "state": "..", "unitary": "..",
//                                       "measurement": ".." } }      optional
//   }
//
// Numbers are written in shortest round-trip form, so reading a file back
// reproduces every double bit for bit. Schema problems raise InputError with
// the JSON pointer of the offending field; syntax errors carry line and column.

Model parse_model(std::string_view text);
std::string serialize_model(const Model& model);

Model read_model_file(const std::filesystem::path& path);
void write_model_file(const Model& model, const std::filesystem::path& path);

}  // namespace cpcq
