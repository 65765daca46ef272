#pragma once

#include <iosfwd>
#include <string>

#include "tess/planar_map.hpp"

namespace tess {

// Text format, one vertex per line:
//   v <id> : <n1> <n2> ... <nk>     neighbors in cyclic order
//   outer : <u> <w>                 boundary face containing dart (u, w)
// `outer` may repeat (an annulus has two). A patch with no outer lines is a
// closed map.
Patch read_patch_text(std::istream& in);
void write_patch_text(std::ostream& out, const Patch& p);

// JSON mirror: {"rotation": [[id, [n...]], ...], "outer": [[u, w], ...]}
Patch read_patch_json(std::istream& in);
void write_patch_json(std::ostream& out, const Patch& p);

// Sniffs JSON by a leading '{'.
Patch read_patch_auto(std::istream& in);

// Reads from a path, "-" meaning stdin.
Patch read_patch_file(const std::string& path);

}  // namespace tess
