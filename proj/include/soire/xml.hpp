#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>

#include "soire/samples.hpp"

namespace soire {

struct XmlError : std::runtime_error {
  XmlError(const std::string& what, std::size_t line, std::size_t column)
      : std::runtime_error(what + " (line " + std::to_string(line) + ", column " +
                           std::to_string(column) + ")"),
        line(line),
        column(column) {}
  std::size_t line;
  std::size_t column;
};

/// Streams the document and collects, for every occurrence of `element`, the
/// left-to-right sequence of its direct child element names as one word.
/// Text, attributes, comments, CDATA and processing instructions are ignored;
/// an occurrence without child elements contributes an epsilon-word. Memory
/// grows with element depth and output size, not document size.
SampleSet extract_samples(std::istream& in, std::string_view element,
                          std::shared_ptr<Alphabet> alphabet = nullptr);

}  // namespace soire
