#include "desirefill/annotator.hpp"

namespace desirefill {

namespace {

struct Word {
  const char* surface;
  const char* lemma;
  Pos pos;
};

// Closed vocabulary shared by the annotator and the synthetic generator.
// Surfaces are unambiguous by construction: a form appears once, with the
// reading the generator uses ("work" is always the noun, "worked" the verb).
const Word kWords[] = {
    // proper names (lemma keeps capitalization)
    {"Jerry", "Jerry", Pos::Noun}, {"Lenin", "Lenin", Pos::Noun},
    {"Hassan", "Hassan", Pos::Noun}, {"Tasha", "Tasha", Pos::Noun},
    {"Greg", "Greg", Pos::Noun}, {"Anna", "Anna", Pos::Noun},
    {"Ben", "Ben", Pos::Noun}, {"Maya", "Maya", Pos::Noun},
    {"Omar", "Omar", Pos::Noun}, {"Lily", "Lily", Pos::Noun},
    {"Rosa", "Rosa", Pos::Noun}, {"Victor", "Victor", Pos::Noun},

    // pronouns
    {"he", "he", Pos::Pron}, {"she", "she", Pos::Pron}, {"it", "it", Pos::Pron},
    {"they", "they", Pos::Pron}, {"him", "him", Pos::Pron},
    {"her", "her", Pos::Pron}, {"them", "them", Pos::Pron},
    {"his", "his", Pos::Pron}, {"their", "their", Pos::Pron},

    // common nouns
    {"barn", "barn", Pos::Noun}, {"house", "house", Pos::Noun},
    {"fence", "fence", Pos::Noun}, {"cake", "cake", Pos::Noun},
    {"cookies", "cookie", Pos::Noun}, {"cocoa", "cocoa", Pos::Noun},
    {"milk", "milk", Pos::Noun}, {"race", "race", Pos::Noun},
    {"car", "car", Pos::Noun}, {"track", "track", Pos::Noun},
    {"prize", "prize", Pos::Noun}, {"garden", "garden", Pos::Noun},
    {"neighbor", "neighbor", Pos::Noun}, {"neighbors", "neighbor", Pos::Noun},
    {"store", "store", Pos::Noun}, {"school", "school", Pos::Noun},
    {"doctor", "doctor", Pos::Noun}, {"teacher", "teacher", Pos::Noun},
    {"mother", "mother", Pos::Noun}, {"brother", "brother", Pos::Noun},
    {"sister", "sister", Pos::Noun}, {"friend", "friend", Pos::Noun},
    {"friends", "friend", Pos::Noun}, {"dog", "dog", Pos::Noun},
    {"cat", "cat", Pos::Noun}, {"letter", "letter", Pos::Noun},
    {"song", "song", Pos::Noun}, {"game", "game", Pos::Noun},
    {"team", "team", Pos::Noun}, {"money", "money", Pos::Noun},
    {"wall", "wall", Pos::Noun}, {"roof", "roof", Pos::Noun},
    {"boat", "boat", Pos::Noun}, {"bridge", "bridge", Pos::Noun},
    {"picture", "picture", Pos::Noun}, {"book", "book", Pos::Noun},
    {"story", "story", Pos::Noun}, {"test", "test", Pos::Noun},
    {"farm", "farm", Pos::Noun}, {"field", "field", Pos::Noun},
    {"party", "party", Pos::Noun}, {"dinner", "dinner", Pos::Noun},
    {"job", "job", Pos::Noun}, {"contest", "contest", Pos::Noun},
    {"medal", "medal", Pos::Noun}, {"trophy", "trophy", Pos::Noun},
    {"morning", "morning", Pos::Noun}, {"day", "day", Pos::Noun},
    {"days", "day", Pos::Noun}, {"summer", "summer", Pos::Noun},
    {"winter", "winter", Pos::Noun}, {"work", "work", Pos::Noun},
    {"body", "body", Pos::Noun}, {"church", "church", Pos::Noun},
    {"trip", "trip", Pos::Noun}, {"way", "way", Pos::Noun},
    {"words", "word", Pos::Noun}, {"example", "example", Pos::Noun},
    {"result", "result", Pos::Noun}, {"contrast", "contrast", Pos::Noun},
    {"hand", "hand", Pos::Noun}, {"cow", "cow", Pos::Noun},
    {"bucket", "bucket", Pos::Noun}, {"rain", "rain", Pos::Noun},
    {"fact", "fact", Pos::Noun}, {"end", "end", Pos::Noun},
    {"turn", "turn", Pos::Noun}, {"comparison", "comparison", Pos::Noun},

    // verbs: base form and the past form the generator emits
    {"want", "want", Pos::Verb}, {"wanted", "want", Pos::Verb},
    {"wish", "wish", Pos::Verb}, {"wished", "wish", Pos::Verb},
    {"hope", "hope", Pos::Verb}, {"hoped", "hope", Pos::Verb},
    {"paint", "paint", Pos::Verb}, {"painted", "paint", Pos::Verb},
    {"bake", "bake", Pos::Verb}, {"baked", "bake", Pos::Verb},
    {"build", "build", Pos::Verb}, {"built", "build", Pos::Verb},
    {"win", "win", Pos::Verb}, {"won", "win", Pos::Verb},
    {"lose", "lose", Pos::Verb}, {"lost", "lose", Pos::Verb},
    {"help", "help", Pos::Verb}, {"helped", "help", Pos::Verb},
    {"thank", "thank", Pos::Verb}, {"thanked", "thank", Pos::Verb},
    {"gift", "gift", Pos::Verb}, {"gifted", "gift", Pos::Verb},
    {"visit", "visit", Pos::Verb}, {"visited", "visit", Pos::Verb},
    {"clean", "clean", Pos::Verb}, {"cleaned", "clean", Pos::Verb},
    {"fix", "fix", Pos::Verb}, {"fixed", "fix", Pos::Verb},
    {"plant", "plant", Pos::Verb}, {"planted", "plant", Pos::Verb},
    {"sing", "sing", Pos::Verb}, {"sang", "sing", Pos::Verb},
    {"dance", "dance", Pos::Verb}, {"danced", "dance", Pos::Verb},
    {"try", "try", Pos::Verb}, {"tried", "try", Pos::Verb},
    {"plan", "plan", Pos::Verb}, {"planned", "plan", Pos::Verb},
    {"finish", "finish", Pos::Verb}, {"finished", "finish", Pos::Verb},
    {"start", "start", Pos::Verb}, {"started", "start", Pos::Verb},
    {"fail", "fail", Pos::Verb}, {"failed", "fail", Pos::Verb},
    {"succeed", "succeed", Pos::Verb}, {"succeeded", "succeed", Pos::Verb},
    {"smile", "smile", Pos::Verb}, {"smiled", "smile", Pos::Verb},
    {"cry", "cry", Pos::Verb}, {"cried", "cry", Pos::Verb},
    {"laugh", "laugh", Pos::Verb}, {"laughed", "laugh", Pos::Verb},
    {"practice", "practice", Pos::Verb}, {"practiced", "practice", Pos::Verb},
    {"study", "study", Pos::Verb}, {"studied", "study", Pos::Verb},
    {"pass", "pass", Pos::Verb}, {"passed", "pass", Pos::Verb},
    {"buy", "buy", Pos::Verb}, {"bought", "buy", Pos::Verb},
    {"sell", "sell", Pos::Verb}, {"sold", "sell", Pos::Verb},
    {"find", "find", Pos::Verb}, {"found", "find", Pos::Verb},
    {"make", "make", Pos::Verb}, {"made", "make", Pos::Verb},
    {"cook", "cook", Pos::Verb}, {"cooked", "cook", Pos::Verb},
    {"eat", "eat", Pos::Verb}, {"ate", "eat", Pos::Verb},
    {"share", "share", Pos::Verb}, {"shared", "share", Pos::Verb},
    {"give", "give", Pos::Verb}, {"gave", "give", Pos::Verb},
    {"get", "get", Pos::Verb}, {"got", "get", Pos::Verb},
    {"go", "go", Pos::Verb}, {"went", "go", Pos::Verb},
    {"come", "come", Pos::Verb}, {"came", "come", Pos::Verb},
    {"run", "run", Pos::Verb}, {"ran", "run", Pos::Verb},
    {"walk", "walk", Pos::Verb}, {"walked", "walk", Pos::Verb},
    {"ride", "ride", Pos::Verb}, {"rode", "ride", Pos::Verb},
    {"say", "say", Pos::Verb}, {"said", "say", Pos::Verb},
    {"tell", "tell", Pos::Verb}, {"told", "tell", Pos::Verb},
    {"ask", "ask", Pos::Verb}, {"asked", "ask", Pos::Verb},
    {"offer", "offer", Pos::Verb}, {"offered", "offer", Pos::Verb},
    {"refuse", "refuse", Pos::Verb}, {"refused", "refuse", Pos::Verb},
    {"reject", "reject", Pos::Verb}, {"rejected", "reject", Pos::Verb},
    {"praise", "praise", Pos::Verb}, {"praised", "praise", Pos::Verb},
    {"reward", "reward", Pos::Verb}, {"rewarded", "reward", Pos::Verb},
    {"hurt", "hurt", Pos::Verb},
    {"steal", "steal", Pos::Verb}, {"stole", "steal", Pos::Verb},
    {"break", "break", Pos::Verb}, {"broke", "break", Pos::Verb},
    {"repair", "repair", Pos::Verb}, {"repaired", "repair", Pos::Verb},
    {"write", "write", Pos::Verb}, {"wrote", "write", Pos::Verb},
    {"read", "read", Pos::Verb},
    {"continue", "continue", Pos::Verb}, {"continued", "continue", Pos::Verb},
    {"stop", "stop", Pos::Verb}, {"stopped", "stop", Pos::Verb},
    {"worked", "work", Pos::Verb},
    {"celebrate", "celebrate", Pos::Verb}, {"celebrated", "celebrate", Pos::Verb},
    {"prepare", "prepare", Pos::Verb}, {"prepared", "prepare", Pos::Verb},
    {"bury", "bury", Pos::Verb}, {"buried", "bury", Pos::Verb},
    {"preserve", "preserve", Pos::Verb}, {"preserved", "preserve", Pos::Verb},
    {"become", "become", Pos::Verb}, {"became", "become", Pos::Verb},
    {"conquer", "conquer", Pos::Verb}, {"conquered", "conquer", Pos::Verb},
    {"compete", "compete", Pos::Verb}, {"competed", "compete", Pos::Verb},
    {"die", "die", Pos::Verb}, {"died", "die", Pos::Verb},
    {"take", "take", Pos::Verb}, {"took", "take", Pos::Verb},
    {"assist", "assist", Pos::Verb}, {"assisted", "assist", Pos::Verb},
    {"aid", "aid", Pos::Verb}, {"aided", "aid", Pos::Verb},
    {"decorate", "decorate", Pos::Verb}, {"decorated", "decorate", Pos::Verb},
    {"construct", "construct", Pos::Verb}, {"constructed", "construct", Pos::Verb},
    {"mend", "mend", Pos::Verb}, {"mended", "mend", Pos::Verb},
    {"enjoy", "enjoy", Pos::Verb}, {"enjoyed", "enjoy", Pos::Verb},
    {"forget", "forget", Pos::Verb}, {"forgot", "forget", Pos::Verb},
    {"spill", "spill", Pos::Verb}, {"spilled", "spill", Pos::Verb},
    {"hug", "hug", Pos::Verb}, {"hugged", "hug", Pos::Verb},

    // adjectives
    {"happy", "happy", Pos::Adj}, {"glad", "glad", Pos::Adj},
    {"proud", "proud", Pos::Adj}, {"cheerful", "cheerful", Pos::Adj},
    {"excited", "excited", Pos::Adj}, {"sad", "sad", Pos::Adj},
    {"upset", "upset", Pos::Adj}, {"angry", "angry", Pos::Adj},
    {"miserable", "miserable", Pos::Adj}, {"disappointed", "disappointed", Pos::Adj},
    {"tired", "tired", Pos::Adj}, {"ready", "ready", Pos::Adj},
    {"new", "new", Pos::Adj}, {"old", "old", Pos::Adj},
    {"big", "big", Pos::Adj}, {"small", "small", Pos::Adj},
    {"fast", "fast", Pos::Adj}, {"slow", "slow", Pos::Adj},
    {"hard", "hard", Pos::Adj}, {"easy", "easy", Pos::Adj},
    {"fresh", "fresh", Pos::Adj}, {"warm", "warm", Pos::Adj},
    {"long", "long", Pos::Adj},

    // adverbs
    {"really", "really", Pos::Adv}, {"quickly", "quickly", Pos::Adv},
    {"slowly", "slowly", Pos::Adv}, {"again", "again", Pos::Adv},
    {"soon", "soon", Pos::Adv}, {"together", "together", Pos::Adv},
    {"too", "too", Pos::Adv}, {"very", "very", Pos::Adv},
    {"also", "also", Pos::Adv}, {"finally", "finally", Pos::Adv},
    {"never", "never", Pos::Adv}, {"outside", "outside", Pos::Adv},

    // function words, auxiliaries, cues, punctuation
    {"to", "to", Pos::Other}, {"the", "the", Pos::Other},
    {"a", "a", Pos::Other}, {"an", "an", Pos::Other},
    {"and", "and", Pos::Other}, {"or", "or", Pos::Other},
    {"of", "of", Pos::Other}, {"in", "in", Pos::Other},
    {"on", "on", Pos::Other}, {"at", "at", Pos::Other},
    {"with", "with", Pos::Other}, {"for", "for", Pos::Other},
    {"by", "by", Pos::Other}, {"beside", "beside", Pos::Other},
    {"was", "be", Pos::Other}, {"were", "be", Pos::Other},
    {"is", "be", Pos::Other}, {"are", "be", Pos::Other},
    {"be", "be", Pos::Other}, {"been", "be", Pos::Other},
    {"being", "be", Pos::Other}, {"am", "be", Pos::Other},
    {"had", "have", Pos::Other}, {"has", "have", Pos::Other},
    {"have", "have", Pos::Other}, {"did", "do", Pos::Other},
    {"do", "do", Pos::Other}, {"does", "do", Pos::Other},
    {"will", "will", Pos::Other}, {"would", "will", Pos::Other},
    {"could", "can", Pos::Other}, {"should", "shall", Pos::Other},
    {"not", "not", Pos::Other},
    {"that", "that", Pos::Other}, {"this", "this", Pos::Other},
    {"there", "there", Pos::Other}, {"then", "then", Pos::Other},
    {"so", "so", Pos::Other}, {"but", "but", Pos::Other},
    {"one", "one", Pos::Other}, {"two", "two", Pos::Other},
    {"three", "three", Pos::Other}, {"six", "six", Pos::Other},
    {"last", "last", Pos::Other}, {"before", "before", Pos::Other},
    {"after", "after", Pos::Other}, {"when", "when", Pos::Other},
    {"because", "because", Pos::Other}, {"since", "since", Pos::Other},
    {"as", "as", Pos::Other}, {"however", "however", Pos::Other},
    {"instead", "instead", Pos::Other}, {"meanwhile", "meanwhile", Pos::Other},
    {"although", "although", Pos::Other}, {"though", "though", Pos::Other},
    {"even", "even", Pos::Other}, {"still", "still", Pos::Other},
    {"yet", "yet", Pos::Other}, {"nevertheless", "nevertheless", Pos::Other},
    {"nonetheless", "nonetheless", Pos::Other}, {"hence", "hence", Pos::Other},
    {"consequently", "consequently", Pos::Other},
    {"therefore", "therefore", Pos::Other}, {"thus", "thus", Pos::Other},
    {"overall", "overall", Pos::Other}, {"indeed", "indeed", Pos::Other},
    {"rather", "rather", Pos::Other}, {"whereas", "whereas", Pos::Other},
    {"conversely", "conversely", Pos::Other},
    {"regardless", "regardless", Pos::Other}, {"neither", "neither", Pos::Other},
    {"nor", "nor", Pos::Other}, {"accordingly", "accordingly", Pos::Other},
    {"thereby", "thereby", Pos::Other}, {"ultimately", "ultimately", Pos::Other},
    {"specifically", "specifically", Pos::Other}, {"other", "other", Pos::Other},
    {".", ".", Pos::Other}, {",", ",", Pos::Other},
    {"!", "!", Pos::Other}, {"?", "?", Pos::Other},
};

RuleGrammar make_builtin() {
  RuleGrammar g;
  for (const Word& w : kWords) {
    g.lexicon.emplace(w.surface, RuleGrammar::Entry{w.lemma, w.pos});
  }
  g.be_auxiliaries = {"was", "were", "is", "are", "am", "be", "been", "being"};
  g.auxiliaries = g.be_auxiliaries;
  for (const char* a : {"had", "has", "have", "did", "do", "does", "will",
                        "would", "could", "should"}) {
    g.auxiliaries.insert(a);
  }
  g.negators = {"not", "never"};
  g.prepositions = {"to", "of", "in", "on", "at", "with", "for", "by", "beside"};
  g.determiners = {"the", "a", "an", "this", "that"};
  g.possessive_pronouns = {"his", "their"};
  g.nominative_pronouns = {"he", "she", "they"};
  g.conjunctions = {"and", "or"};
  g.desire_lemmas = {"want", "wish", "hope"};
  return g;
}

}  // namespace

const RuleGrammar& RuleGrammar::builtin() {
  static const RuleGrammar g = make_builtin();
  return g;
}

}  // namespace desirefill
