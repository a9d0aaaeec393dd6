#include "cohesion/text.hpp"

namespace cohesion {

namespace {

// Function words filtered before counting repetitions: determiners,
// pronouns, prepositions, conjunctions, auxiliaries and every inflection
// of BE and HAVE.
constexpr const char* kDefaultStoplist[] = {
    // determiners and articles
    "a", "an", "the", "this", "that", "these", "those", "each", "every",
    "either", "neither", "both", "all", "any", "some", "such", "few",
    "more", "most", "other", "another", "same", "own",
    // pronouns
    "i", "me", "my", "mine", "myself", "we", "us", "our", "ours",
    "ourselves", "you", "your", "yours", "yourself", "yourselves", "he",
    "him", "his", "himself", "she", "her", "hers", "herself", "it", "its",
    "itself", "they", "them", "their", "theirs", "themselves", "who",
    "whom", "whose", "which", "what", "one", "ones",
    // BE
    "be", "am", "is", "are", "was", "were", "been", "being",
    // HAVE
    "have", "has", "had", "having",
    // DO and modals
    "do", "does", "did", "doing", "done", "will", "would", "shall",
    "should", "can", "could", "may", "might", "must",
    // prepositions
    "about", "above", "across", "after", "against", "along", "among",
    "around", "at", "before", "behind", "below", "beneath", "beside",
    "between", "beyond", "by", "down", "during", "except", "for", "from",
    "in", "inside", "into", "near", "of", "off", "on", "onto", "out",
    "outside", "over", "past", "since", "through", "throughout", "till",
    "to", "toward", "towards", "under", "until", "up", "upon", "with",
    "within", "without",
    // conjunctions and complementizers
    "and", "or", "nor", "but", "so", "yet", "if", "then", "else", "when",
    "while", "where", "why", "how", "because", "although", "though",
    "unless", "whether", "than", "as",
    // adverbial function words
    "not", "no", "nor", "too", "very", "just", "only", "also", "there",
    "here", "again", "once", "ever", "never", "always", "now", "thus",
    "however", "therefore",
    // common contractions produced by the tokenizer
    "don't", "doesn't", "didn't", "won't", "wouldn't", "can't", "cannot",
    "couldn't", "shouldn't", "mustn't", "isn't", "aren't", "wasn't",
    "weren't", "hasn't", "haven't", "hadn't", "it's", "that's", "there's",
    "what's", "who's", "i'm", "i've", "i'll", "i'd", "you're", "you've",
    "we're", "we've", "they're", "they've", "he's", "she's", "let's",
};

} // namespace

Stoplist Stoplist::defaults() {
    Stoplist list;
    for (const char* word : kDefaultStoplist) list.add(word);
    return list;
}

} // namespace cohesion
