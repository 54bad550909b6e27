#include "rect_index/texts.hpp"

#include <algorithm>

namespace rect_index {

namespace {

std::vector<std::vector<Symbol>> reversed(std::vector<std::vector<Symbol>> texts) {
    for (auto& t : texts) {
        std::reverse(t.begin(), t.end());
    }
    return texts;
}

}

SequenceCollection::Lce::Lce(const std::vector<std::vector<Symbol>>& texts)
    : fwd_(texts), bwd_(reversed(texts)) {}

}
