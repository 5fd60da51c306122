#ifndef TAMECHECK_CORPUS_HPP
#define TAMECHECK_CORPUS_HPP

#include <string>
#include <vector>

namespace tamecheck {

struct CorpusEntry {
  std::string name;
  std::string description;
  std::string text;  // problem file contents
};

const std::vector<CorpusEntry>& corpus_examples();

}  // namespace tamecheck

#endif
