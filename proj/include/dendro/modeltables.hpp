#pragma once

#include "dendro/dend.hpp"
#include "dendro/optable.hpp"
#include "dendro/tridend.hpp"
#include "dendro/words.hpp"

namespace dendro {

inline OpTable<SchroederTree> optable(const TridendAlgebra& alg) {
    OpTable<SchroederTree> t;
    t.binary["prec"] = [alg](const DTElement& x, const DTElement& y) { return alg.prec(x, y); };
    t.binary["succ"] = [alg](const DTElement& x, const DTElement& y) { return alg.succ(x, y); };
    t.binary["bullet"] = [alg](const DTElement& x, const DTElement& y) { return alg.bullet(x, y); };
    t.binary["star"] = [alg](const DTElement& x, const DTElement& y) { return alg.star(x, y); };
    t.derivation = [alg](const DTElement& x) { return alg.d(x); };
    t.render = [](const DTElement& x) { return render(x); };
    return t;
}

inline OpTable<BinaryTree> optable(const DendAlgebra& alg) {
    OpTable<BinaryTree> t;
    t.binary["prec"] = [alg](const DDElement& x, const DDElement& y) { return alg.prec(x, y); };
    t.binary["succ"] = [alg](const DDElement& x, const DDElement& y) { return alg.succ(x, y); };
    t.binary["star"] = [alg](const DDElement& x, const DDElement& y) { return alg.star(x, y); };
    t.derivation = [alg](const DDElement& x) { return alg.d(x); };
    t.render = [](const DDElement& x) { return render(x); };
    return t;
}

inline OpTable<TensorWord> optable(const QShuffleAlgebra& alg) {
    OpTable<TensorWord> t;
    t.binary["prec"] = [alg](const TElement& x, const TElement& y) { return alg.prec(x, y); };
    t.binary["succ"] = [alg](const TElement& x, const TElement& y) { return alg.succ(x, y); };
    t.binary["bullet"] = [alg](const TElement& x, const TElement& y) { return alg.bullet(x, y); };
    t.binary["star"] = [alg](const TElement& x, const TElement& y) { return alg.star(x, y); };
    t.derivation = [alg](const TElement& x) { return alg.d(x); };
    t.render = [](const TElement& x) { return render(x); };
    return t;
}

}  // namespace dendro
