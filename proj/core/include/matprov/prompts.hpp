#pragma once

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "matprov/errors.hpp"

namespace matprov {

enum class PromptStage { RelevantText, ProcedureExtraction };

struct PromptTemplate {
  PromptStage stage;
  std::string_view text;
};

// Stage-1 template; placeholder <PAPER_TEXT>.
PromptTemplate relevant_text_template();

// Stage-2 template; placeholders <SYNTHESIS_TEXT> and <IN_CONTEXT_EXAMPLE>.
PromptTemplate procedure_extraction_template();

class MissingSubstitutionError : public Error {
public:
  explicit MissingSubstitutionError(const std::string& placeholder)
      : Error("no substitution for placeholder <" + placeholder + ">"),
        placeholder_(placeholder) {}
  const std::string& placeholder() const { return placeholder_; }

private:
  std::string placeholder_;
};

// Placeholder names (<LIKE_THIS>) occurring in a template, in order.
std::vector<std::string> template_placeholders(const PromptTemplate& tmpl);

// Replaces every placeholder with its substitution. Substitutions may be
// empty (zero-shot example slot) but must be present for every placeholder.
std::string render_prompt(const PromptTemplate& tmpl,
                          const std::map<std::string, std::string>& substitutions);

}  // namespace matprov
