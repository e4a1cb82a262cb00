//
// Copyright (c) 2026 The alp authors
//
// Permission is hereby granted, free of charge, to any person obtaining a copy
// of this software and associated documentation files (the "Software"), to
// deal in the Software without restriction, including without limitation the
// rights to use, copy, modify, merge, publish, distribute, sublicense, and/or
// sell copies of the Software, and to permit persons to whom the Software is
// furnished to do so, subject to the following conditions:
//
// The above copyright notice and this permission notice shall be included in
// all copies or substantial portions of the Software.
//
// THE SOFTWARE IS PROVIDED "AS IS", WITHOUT WARRANTY OF ANY KIND, EXPRESS OR
// IMPLIED, INCLUDING BUT NOT LIMITED TO THE WARRANTIES OF MERCHANTABILITY,
// FITNESS FOR A PARTICULAR PURPOSE AND NONINFRINGEMENT. IN NO EVENT SHALL THE
// AUTHORS OR COPYRIGHT HOLDERS BE LIABLE FOR ANY CLAIM, DAMAGES OR OTHER
// LIABILITY, WHETHER IN AN ACTION OF CONTRACT, TORT OR OTHERWISE, ARISING
// FROM, OUT OF OR IN CONNECTION WITH THE SOFTWARE OR THE USE OR OTHER DEALINGS
// IN THE SOFTWARE.
//

#pragma once

#include <alp/ground.hpp>
#include <alp/solver.hpp>

#include <iosfwd>
#include <string>
#include <vector>

namespace alp::cli {

enum ExitCode : int { kFound = 0, kNone = 1, kFailure = 2 };

/// Runs one command line (without the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// `% solution k` followed by one fact per line.
std::string format_facts(const GroundTheory& theory, const Delta& delta, std::size_t k);

/// One JSON array of `{"pred": ..., "args": [...]}` objects, no newline.
std::string format_json(const GroundTheory& theory, const Delta& delta);

/// Reads the JSON delta format; every atom must be a candidate abducible.
Delta parse_delta(const GroundTheory& theory, const std::string& json_text);

} // namespace alp::cli
