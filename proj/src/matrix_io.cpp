// Copyright 2026 The lindbladlab authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "lindbladlab/matrix_io.hpp"

#include <cerrno>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

namespace lindbladlab {

namespace {

struct Cursor {
  const std::string& text;
  const std::string& origin;
  std::size_t pos = 0;
  long line = 1;
  long column = 1;

  [[noreturn]] void fail(const std::string& message) const {
    throw ValidationError(origin + ":" + std::to_string(line) + ":" + std::to_string(column) +
                          ": " + message);
  }

  void advance(char c) {
    ++pos;
    if (c == '\n') {
      ++line;
      column = 1;
    } else {
      ++column;
    }
  }

  void skip_space() {
    while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\t' || text[pos] == '\r' ||
                                 text[pos] == '\n'))
      advance(text[pos]);
  }

  bool at_end() {
    skip_space();
    return pos >= text.size();
  }

  long next_integer(const char* what) {
    skip_space();
    if (pos >= text.size()) fail(std::string("expected ") + what + ", found end of input");
    errno = 0;
    char* end = nullptr;
    const long v = std::strtol(text.c_str() + pos, &end, 10);
    if (end == text.c_str() + pos) fail(std::string("expected ") + what);
    if (errno == ERANGE) fail(std::string(what) + " out of range");
    while (text.c_str() + pos != end) advance(text[pos]);
    return v;
  }

  double next_real(const char* what) {
    skip_space();
    if (pos >= text.size()) fail(std::string("expected ") + what + ", found end of input");
    errno = 0;
    char* end = nullptr;
    const double v = std::strtod(text.c_str() + pos, &end);
    if (end == text.c_str() + pos) fail(std::string("expected ") + what);
    if (errno == ERANGE) fail(std::string(what) + " out of range");
    while (text.c_str() + pos != end) advance(text[pos]);
    return v;
  }
};

}  // namespace

ComplexMatrix parse_matrix(const std::string& text, const std::string& origin) {
  Cursor cur{text, origin};
  const long rows = cur.next_integer("row count");
  const long cols = cur.next_integer("column count");
  if (rows < 1 || cols < 1) cur.fail("matrix dimensions must be positive");
  ComplexMatrix m(rows, cols);
  for (long i = 0; i < rows; ++i)
    for (long j = 0; j < cols; ++j) {
      const double re = cur.next_real("real part");
      const double im = cur.next_real("imaginary part");
      m(i, j) = Complex(re, im);
    }
  if (!cur.at_end()) cur.fail("trailing content after the last matrix entry");
  return m;
}

std::string format_matrix(const ComplexMatrix& m) {
  std::string out = std::to_string(m.rows()) + " " + std::to_string(m.cols()) + "\n";
  char buf[32];
  for (Index i = 0; i < m.rows(); ++i) {
    for (Index j = 0; j < m.cols(); ++j) {
      std::snprintf(buf, sizeof(buf), "%.16e", m(i, j).real());
      out += buf;
      out += ' ';
      std::snprintf(buf, sizeof(buf), "%.16e", m(i, j).imag());
      out += buf;
      out += (j + 1 < m.cols()) ? ' ' : '\n';
    }
  }
  return out;
}

ComplexMatrix load_matrix(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ValidationError("load_matrix: cannot open '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_matrix(buffer.str(), path);
}

void save_matrix(const std::string& path, const ComplexMatrix& m) {
  if (m.size() == 0) throw ValidationError("save_matrix: refusing to write an empty matrix");
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw ValidationError("save_matrix: cannot open '" + path + "' for writing");
  out << format_matrix(m);
  if (!out) throw ValidationError("save_matrix: write to '" + path + "' failed");
}

}  // namespace lindbladlab
