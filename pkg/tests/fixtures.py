"""Shared text fixtures used across the test modules."""

WSD_SAMPLE_QUESTION = "What is the term of office for each house member?"

WSD_SAMPLE_PARAGRAPH = (
    "In November 2006, the Victorian Legislative Council elections were held "
    "under a new multi-member proportional representation system. The State of "
    "Victoria was divided into eight electorates with each electorate "
    "represented by five representatives elected by Single Transferable Vote. "
    "The total number of upper house members was reduced from 44 to 40 and "
    "their term of office is now the same as the lower house members—four "
    "years. Elections for the Victorian Parliament are now fixed and occur in "
    "November every four years. Prior to the 2006 election, the Legislative "
    "Council consisted of 44 members elected to eight-year terms from 22 "
    "two-member electorates."
)

ASSEMBLY_GLOSS = "an official assembly having legislative powers"

DRIFT_QUESTION = "Which direction did Romans use to drift through the Rhine?"
DRIFT_VARIANT = "Which way did Romans use to drift through the Rhine?"
