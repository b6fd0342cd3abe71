#pragma once

// Hand-checked wire exchanges used as byte-level fixtures. The seven-step
// answer is in canonical spacing and must survive parse -> print unchanged;
// the four-step answer carries a space after each step tag, which parsing
// tolerates and printing normalizes away. The seventeen-step answer is a
// captured failure: its very first line claims the goal as an assumption.

namespace fixtures {

// --- seven-step exchange ---------------------------------------------------

inline constexpr const char* kSevenGoal =
    "Implies(Implies(Implies(Implies(R, S), Implies(R, R)), Implies(S, P)), Implies(Q, "
    "Implies(Implies(S, S), Implies(R, Q))))";

inline constexpr const char* kSevenAssumption0 =
    "Implies(Implies(Implies(Implies(Implies(P, R), Implies(Q, P)), Implies(Implies(Q, R), "
    "Implies(R, P))), Implies(Implies(P, P), Implies(Q, Implies(S, R)))), "
    "Implies(Implies(Implies(Implies(Implies(P, S), Implies(S, S)), Implies(Implies(P, R), "
    "Implies(S, P))), R), Implies(Implies(Implies(Implies(R, S), Implies(R, R)), Implies(S, "
    "P)), Implies(Q, Implies(Implies(S, S), Implies(R, Q))))))";

inline constexpr const char* kSevenAssumption1 =
    "Implies(Implies(Implies(Implies(P, R), Implies(Q, P)), Implies(Implies(Q, R), "
    "Implies(R, P))), Implies(Implies(P, P), Implies(Q, Implies(S, R))))";

inline constexpr const char* kSevenAssumption2 =
    "Implies(Implies(Implies(Implies(P, S), Implies(S, S)), Implies(Implies(P, R), "
    "Implies(S, P))), R)";

inline constexpr const char* kSevenAnswer =
    "<Step 1>Implies(Implies(Implies(Implies(P, R), Implies(Q, P)), Implies(Implies(Q, R), "
    "Implies(R, P))), Implies(Implies(P, P), Implies(Q, Implies(S, R)))) - Assumption\n"
    "<Step 2>Implies(Implies(Implies(Implies(Implies(P, R), Implies(Q, P)), "
    "Implies(Implies(Q, R), Implies(R, P))), Implies(Implies(P, P), Implies(Q, Implies(S, "
    "R)))), Implies(Implies(Implies(Implies(Implies(P, S), Implies(S, S)), "
    "Implies(Implies(P, R), Implies(S, P))), R), Implies(Implies(Implies(Implies(R, S), "
    "Implies(R, R)), Implies(S, P)), Implies(Q, Implies(Implies(S, S), Implies(R, Q)))))) - "
    "Assumption\n"
    "<Step 3>Step 1 and Step 2 -> Implies(Implies(Implies(Implies(Implies(P, S), Implies(S, "
    "S)), Implies(Implies(P, R), Implies(S, P))), R), Implies(Implies(Implies(Implies(R, S), "
    "Implies(R, R)), Implies(S, P)), Implies(Q, Implies(Implies(S, S), Implies(R, Q))))) - "
    "Modus Ponens\n"
    "<Step 4>Implies(Implies(Implies(Implies(P, S), Implies(S, S)), Implies(Implies(P, R), "
    "Implies(S, P))), R) - Assumption\n"
    "<Step 5>Implies(Implies(Implies(Implies(Implies(P, S), Implies(S, S)), "
    "Implies(Implies(P, R), Implies(S, P))), R), Implies(Implies(Implies(Implies(R, S), "
    "Implies(R, R)), Implies(S, P)), Implies(Q, Implies(Implies(S, S), Implies(R, Q))))) - "
    "Deducted\n"
    "<Step 6>Step 4 and Step 5 -> Implies(Implies(Implies(Implies(R, S), Implies(R, R)), "
    "Implies(S, P)), Implies(Q, Implies(Implies(S, S), Implies(R, Q)))) - Modus Ponens\n"
    "<Step 7>Implies(Implies(Implies(Implies(R, S), Implies(R, R)), Implies(S, P)), "
    "Implies(Q, Implies(Implies(S, S), Implies(R, Q)))) - Deducted\n";

// --- four-step exchange ----------------------------------------------------

inline constexpr const char* kFourGoal =
    "Implies(Implies(Implies(Implies(P, S), R), Implies(Implies(R, Q), Q)), Implies(P, "
    "Implies(Implies(P, R), P)))";

inline constexpr const char* kFourAssumption0 =
    "Implies(Implies(Implies(Implies(S, Q), Implies(S, S)), Implies(Implies(Q, S), "
    "Implies(P, Q))), S)";

inline constexpr const char* kFourAssumption1 =
    "Implies(Implies(Implies(Implies(Implies(S, Q), Implies(S, S)), Implies(Implies(Q, S), "
    "Implies(P, Q))), S), Implies(Implies(Implies(Implies(P, S), R), Implies(Implies(R, Q), "
    "Q)), Implies(P, Implies(Implies(P, R), P))))";

inline constexpr const char* kFourAnswerSpaced =
    "<Step 1> Implies(Implies(Implies(Implies(S, Q), Implies(S, S)), Implies(Implies(Q, S), "
    "Implies(P, Q))), S) - Assumption\n"
    "<Step 2> Implies(Implies(Implies(Implies(Implies(S, Q), Implies(S, S)), "
    "Implies(Implies(Q, S), Implies(P, Q))), S), Implies(Implies(Implies(Implies(P, S), R), "
    "Implies(Implies(R, Q), Q)), Implies(P, Implies(Implies(P, R), P)))) - Assumption\n"
    "<Step 3> Step 1 and Step 2 -> Implies(Implies(Implies(Implies(P, S), R), "
    "Implies(Implies(R, Q), Q)), Implies(P, Implies(Implies(P, R), P))) - Modus Ponens\n"
    "<Step 4> Implies(Implies(Implies(Implies(P, S), R), Implies(Implies(R, Q), Q)), "
    "Implies(P, Implies(Implies(P, R), P))) - Deducted\n";

inline constexpr const char* kFourAnswerCanonical =
    "<Step 1>Implies(Implies(Implies(Implies(S, Q), Implies(S, S)), Implies(Implies(Q, S), "
    "Implies(P, Q))), S) - Assumption\n"
    "<Step 2>Implies(Implies(Implies(Implies(Implies(S, Q), Implies(S, S)), "
    "Implies(Implies(Q, S), Implies(P, Q))), S), Implies(Implies(Implies(Implies(P, S), R), "
    "Implies(Implies(R, Q), Q)), Implies(P, Implies(Implies(P, R), P)))) - Assumption\n"
    "<Step 3>Step 1 and Step 2 -> Implies(Implies(Implies(Implies(P, S), R), "
    "Implies(Implies(R, Q), Q)), Implies(P, Implies(Implies(P, R), P))) - Modus Ponens\n"
    "<Step 4>Implies(Implies(Implies(Implies(P, S), R), Implies(Implies(R, Q), Q)), "
    "Implies(P, Implies(Implies(P, R), P))) - Deducted\n";

// --- seventeen-step failure against the four-step problem -------------------

inline constexpr const char* kWrongAnswer =
    "<Step 1> Implies(Implies(Implies(Implies(P, S), R), Implies(Implies(R, Q), Q)), "
    "Implies(P, Implies(Implies(P, R), P))) - Assumption\n"
    "<Step 2> Implies(Implies(Implies(Implies(Implies(S, R), Implies(Q, P)), "
    "Implies(Implies(S, S), Implies(Q, Q))), Implies(Implies(Implies(Q, P), Implies(P, P)), "
    "Implies(Implies(S, P), Implies(P, S)))), Implies(Implies(Implies(Implies(S, Q), "
    "Implies(S, S)), Implies(Implies(Q, S), Implies(P, Q))), S)) - Assumption\n"
    "<Step 3> Step 1 and Step 2 -> Implies(Implies(Implies(Implies(S, Q), Implies(S, S)), "
    "Implies(Implies(Q, S), Implies(P, Q))), S) - Modus Ponens\n"
    "<Step 4> Implies(Implies(Implies(Implies(S, R), Implies(Q, P)), Implies(Implies(S, S), "
    "Implies(Q, Q))), Implies(Implies(Implies(Q, P), Implies(P, P)), Implies(Implies(S, P), "
    "Implies(P, S)))) - Assumption\n"
    "<Step 5> Implies(Implies(Implies(Implies(S, Q), Implies(S, S)), Implies(Implies(Q, S), "
    "Implies(P, Q))), S) - Deducted\n"
    "<Step 6> Step 3 and Step 5 -> Implies(Implies(Implies(Implies(S, Q), Implies(S, S)), "
    "Implies(Implies(Q, S), Implies(P, Q))), S) - Modus Ponens\n"
    "<Step 7> Implies(Implies(Implies(Implies(S, Q), Implies(S, S)), Implies(Implies(Q, S), "
    "Implies(P, Q))), S) - Deducted\n"
    "<Step 8> Implies(Implies(Implies(Implies(P, S), R), Implies(Implies(R, Q), Q)), "
    "Implies(P, Implies(Implies(P, R), P))) - Deducted\n"
    "<Step 9> Implies(Implies(Implies(Implies(P, S), R), Implies(Implies(R, Q), Q)), "
    "Implies(P, Implies(Implies(P, R), P))) - Deducted\n"
    "<Step 10> Implies(Implies(Implies(Implies(P, S), R), Implies(Implies(R, Q), Q)), "
    "Implies(P, Implies(Implies(P, R), P))) - Deducted\n"
    "<Step 11> Implies(Implies(Implies(Implies(P, S), R), Implies(Implies(R, Q), Q)), "
    "Implies(P, Implies(Implies(P, R), P))) - Deducted\n"
    "<Step 12> Implies(Implies(Implies(Implies(P, S), R), Implies(Implies(R, Q), Q)), "
    "Implies(P, Implies(Implies(P, R), P))) - Deducted\n"
    "<Step 13> Implies(Implies(Implies(Implies(P, S), R), Implies(Implies(R, Q), Q)), "
    "Implies(P, Implies(Implies(P, R), P))) - Deducted\n"
    "<Step 14> Implies(Implies(Implies(Implies(P, S), R), Implies(Implies(R, Q), Q)), "
    "Implies(P, Implies(Implies(P, R), P))) - Deducted\n"
    "<Step 15> Implies(Implies(Implies(Implies(P, S), R), Implies(Implies(R, Q), Q)), "
    "Implies(P, Implies(Implies(P, R), P))) - Deducted\n"
    "<Step 16> Implies(Implies(Implies(Implies(P, S), R), Implies(Implies(R, Q), Q)), "
    "Implies(P, Implies(Implies(P, R), P))) - Deducted\n"
    "<Step 17> Implies(Implies(Implies(Implies(P, S), R), Implies(Implies(R, Q), Q)), "
    "Implies(P, Implies(Implies(P, R), P))) - Deducted\n";

}  // namespace fixtures
