#include "stylediff/findings.hpp"

namespace stylediff {

const char* verdict_name(Verdict v) {
    switch (v) {
        case Verdict::ModelBetter: return "model-better";
        case Verdict::Tie: return "tie";
        case Verdict::HumanBetter: return "human-better";
    }
    return "?";
}

CodePair make_pair(std::string task_id, std::string model, std::string reference_code,
                   std::string candidate_code, std::vector<std::string> repo_symbols) {
    CodePair pair;
    pair.task_id = std::move(task_id);
    pair.model = std::move(model);
    pair.reference = parse_source(std::move(reference_code));
    pair.candidate = parse_source(std::move(candidate_code));
    for (std::string& s : repo_symbols) pair.repo_symbols.insert(std::move(s));
    return pair;
}

}  // namespace stylediff
