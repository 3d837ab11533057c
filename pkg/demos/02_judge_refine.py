"""
Rationales from the judge-refine loop
=====================================

Runs the scored rationale loop against the offline mock backend and prints
the four records produced for one image: glimpse and gaze, positive and
negative.
"""

from mipd.core import SituationFrame
from mipd.encoders import HashTextEncoder
from mipd.jrg import JRGConfig, MockBackend, build_confusion_table, generate_rationales, judge_and_refine
from mipd.toy import make_toy_dataset

vocab, dataset, _ = make_toy_dataset()
frame = dataset[0].training_frame()
print("gold situation:", frame.verb, {r: n for r, (n, _) in frame.assignments.items()})

# negatives swap verbs and nouns for their nearest neighbours in text space
backend = MockBackend(confusion=build_confusion_table(vocab, HashTextEncoder(dim=64)), fallback_verbs=vocab.verbs)
for rec in generate_rationales(dataset[0].image_id, frame, backend, JRGConfig(threshold=8, max_rounds=5)):
    print(f"{rec.kind.value:8} {rec.polarity.value:9} score={rec.score} rounds={rec.rounds} flagged={rec.flagged}")
    print("   ", rec.text)

# a scripted judge: the draft scores 3, refinements score 5 then 9
scripted = MockBackend(scores=[3, 5, 9])
out = judge_and_refine("a rough draft", frame, scripted, JRGConfig(8, 5), image_id="x", kind="glimpse")
print("scripted loop:", out.rounds, "rounds, final score", out.score, "flagged", out.flagged)

# a judge that never reaches the threshold: the best refinement is kept and flagged
stubborn = MockBackend(scores=[2, 4, 6, 5, 3, 1])
out = judge_and_refine("a rough draft", frame, stubborn, JRGConfig(8, 5), image_id="x", kind="glimpse")
print("stubborn loop:", out.rounds, "rounds, kept score", out.score, "flagged", out.flagged)
