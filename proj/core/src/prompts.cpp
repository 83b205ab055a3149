#include "rdbe/prompts.hpp"

#include <nlohmann/json.hpp>

#include "rdbe/errors.hpp"
#include "rdbe/hash.hpp"

namespace rdbe {

namespace {

const char* kSystemMessage =
    "You are a helpful, accurate, and fair virtual assistant with expertise "
    "in English composition, specializing in evaluating and accurately "
    "scoring essays written by students. A predefined [Subject] is provided, "
    "followed by the corresponding [Essay]. A [Scoring Rubric] is then "
    "explained, and the [Score] that the essay receives is based on the "
    "mentioned rubric without considering any other rubrics, even those "
    "logical or required, represented by a number from the list [1.0, 1.5, "
    "2.0, 2.5, 3.0, 3.5, 4.0, 4.5, 5.0]. As an expert in accurate essay "
    "evaluation, your role is to provide insights into strengths and "
    "weaknesses related to the score by analyzing only both the quality of "
    "presence (if present) or absence of the aspects directly mentioned in "
    "the rubric's explanation within the essay based on the received score "
    "and interpret them in a short text. For scores higher than 2.5, you "
    "should focus more on identifying strengths and give less attention to "
    "stating weaknesses. Conversely, for scores lower than 2.5, prioritize "
    "identifying weaknesses and give less attention to stating strengths.";

}  // namespace

const std::string& default_system_message() {
  static const std::string msg = kSystemMessage;
  return msg;
}

ChatPrompt build_reasoning_prompt(const EssayRecord& record,
                                  const RubricSpec& rubric, double score,
                                  const std::string& model_id,
                                  const GenParams& params) {
  ScoreGrid grid;
  if (!is_tenths_value(score) || !grid.contains(score)) {
    throw Error(ErrorCategory::data,
                "build_reasoning_prompt: score off grid: " + std::to_string(score));
  }
  ChatPrompt prompt;
  prompt.system = default_system_message();
  prompt.user = "[Subject]\n" + record.subject + "\n\n[Essay]\n" + record.essay +
                "\n\n[Scoring Rubric]\n" + rubric.description + "\n\n[Score]\n" +
                format_score(score);
  prompt.model_id = model_id;
  prompt.params = params;
  prompt.record_id = record.id;
  prompt.rubric_id = rubric.rubric_id;
  prompt.gold_score = score;
  return prompt;
}

std::string prompt_hash(const ChatPrompt& prompt) {
  nlohmann::json j{{"model_id", prompt.model_id},
                   {"params",
                    {{"max_output_tokens", prompt.params.max_output_tokens},
                     {"temperature", prompt.params.temperature}}},
                   {"system", prompt.system},
                   {"user", prompt.user}};
  return sha256_hex(j.dump());
}

}  // namespace rdbe
