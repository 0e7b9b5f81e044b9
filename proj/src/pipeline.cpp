#include "desirefill/pipeline.hpp"

namespace desirefill {

PreparedInstance prepare_instance(const DesireInstance& instance,
                                  const Lexicons& lex,
                                  double te_threshold) {
  PreparedInstance out;
  out.id = instance.id;
  out.label = instance.label;
  out.hyp = normalize(instance, lex);
  out.te = judge(instance, out.hyp, lex, te_threshold);
  out.feats = extract(instance, out.hyp, lex, out.te);
  out.aggregated = aggregate(out.feats);
  out.bow = bag_of_words(instance);
  return out;
}

std::vector<PreparedInstance> prepare_corpus(
    const std::vector<DesireInstance>& corpus,
    const Lexicons& lex,
    double te_threshold,
    Exec exec) {
  if (te_threshold <= 0.0 || te_threshold > 1.0) {
    throw DataError("entailment threshold must be in (0, 1]");
  }
  std::vector<PreparedInstance> out(corpus.size());
  for_each_index(exec, static_cast<std::ptrdiff_t>(corpus.size()), [&](std::size_t i) {
    out[i] = prepare_instance(corpus[i], lex, te_threshold);
  });
  return out;
}

}  // namespace desirefill
