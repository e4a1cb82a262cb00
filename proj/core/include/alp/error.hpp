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

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

namespace alp {

/// Position of a parsed node or diagnostic. Line and column are 1-based.
struct SourceSpan {
    std::string file;
    std::uint32_t line = 0;
    std::uint32_t column = 0;
    std::uint32_t offset = 0;

    bool valid() const { return line != 0; }
    std::string str() const;

    // Spans are metadata: they never take part in structural equality.
    friend bool operator==(const SourceSpan&, const SourceSpan&) { return true; }
};

/// Semantic error raised by normalization, grounding and solving.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg, std::optional<SourceSpan> where = std::nullopt);

    const std::optional<SourceSpan>& where() const { return where_; }
    /// The message without the location prefix.
    const std::string& message() const { return message_; }

private:
    std::optional<SourceSpan> where_;
    std::string message_;
};

} // namespace alp
