#pragma once

#include <string>

#include "tpfc/types.hpp"

namespace tpfc {

/// Versioned knowledge JSON: {version, kind, C, d, centers? directions?
/// biases? weights?}. Doubles round-trip losslessly.
void save_knowledge(const std::string& path, const SourceKnowledge& knowledge);

SourceKnowledge load_knowledge(const std::string& path);

std::string knowledge_to_json_text(const SourceKnowledge& knowledge);
SourceKnowledge knowledge_from_json_text(const std::string& text);

}  // namespace tpfc
