#pragma once

#include <string>
#include <string_view>

#include "matprov/errors.hpp"

namespace matprov {

struct PaperText {
  std::string doi;   // from <idno type="DOI"> when present, else empty
  std::string body;  // body paragraphs, separated by blank lines
};

class XmlError : public Error {
public:
  explicit XmlError(const std::string& what) : Error("XML error: " + what) {}
};

class NoBodyError : public Error {
public:
  NoBodyError() : Error("TEI document has no body text") {}
};

// Extracts paragraph text from the <body> of a GROBID-style TEI document.
// Front matter (title, abstract) and the <back> references never contribute;
// whitespace inside a paragraph collapses to single spaces and paragraphs are
// joined with blank lines. Throws XmlError on malformed input and NoBodyError
// when no body paragraph remains.
PaperText tei_body_text(std::string_view xml);

}  // namespace matprov
