#ifndef RDBE_PROMPTS_HPP
#define RDBE_PROMPTS_HPP

#include <string>

#include "rdbe/corpus.hpp"
#include "rdbe/rubrics.hpp"

namespace rdbe {

struct GenParams {
  double temperature = 0.0;  // deterministic teacher output by default
  int max_output_tokens = 512;
};

// A fully rendered chat request. record_id/rubric_id/gold_score travel with
// the prompt for bookkeeping but do not enter the content hash.
struct ChatPrompt {
  std::string system;
  std::string user;
  std::string model_id;
  GenParams params;

  std::string record_id;
  std::string rubric_id;
  double gold_score = 0.0;
};

// The default teacher system message. Fixed text; a golden test pins its
// SHA-256 so accidental edits are caught.
const std::string& default_system_message();

// User message blocks in the fixed order [Subject], [Essay],
// [Scoring Rubric], [Score]: each tag on its own line, payload after it,
// blank line between blocks, score rendered with one decimal.
ChatPrompt build_reasoning_prompt(const EssayRecord& record,
                                  const RubricSpec& rubric, double score,
                                  const std::string& model_id = "",
                                  const GenParams& params = {});

// Content hash over (model_id, params, system, user) as canonical JSON.
std::string prompt_hash(const ChatPrompt& prompt);

}  // namespace rdbe

#endif
