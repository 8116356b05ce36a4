#!/usr/bin/env python3
"""Build the bundled mini dictionary in WordNet 3.0 file format.

Writes index.{noun,verb,adj,adv}, data.{noun,verb,adj,adv}, the
{noun,verb,adj,adv}.exc exception lists and a WordNet Domains mapping into
data/mini_wordnet/. Byte offsets, pointer symmetry and sense ordering follow
the stock format, so the same files load through any conforming reader.

Relations are declared one-way here; the builder emits the inverse pointer
automatically (hypernym/hyponym, meronym/holonym, antonym, similar-to).

Usage: python tools/make_mini_wordnet.py [output_dir]
"""

from __future__ import annotations

import re
import sys
from collections import defaultdict
from pathlib import Path

OUT_DIR = Path(sys.argv[1]) if len(sys.argv) > 1 else Path(__file__).resolve().parent.parent / "data" / "mini_wordnet"

_MARKER = re.compile(r"\((a|p|ip)\)$")


def d(key, pos, words, gloss, ex=(), hyper=None, part_mer=(), member_mer=(),
      antonym=(), entails=(), similar=(), domains=None, satellite=False):
    return dict(key=key, pos=pos, words=words.split("|"), gloss=gloss, ex=list(ex),
                hyper=[hyper] if isinstance(hyper, str) else list(hyper or ()),
                part_mer=list(part_mer), member_mer=list(member_mer),
                antonym=list(antonym), entails=list(entails), similar=list(similar),
                domains=domains, satellite=satellite)


SYNSETS = [
    # ------------------------------------------------------------- nouns
    # upper scaffold
    d("entity", "n", "entity",
      "that which is perceived or known or inferred to have its own distinct existence (living or nonliving)",
      domains="factotum"),
    d("physical_object", "n", "object|physical_object",
      "a tangible and visible entity; an entity that can cast a shadow",
      ["it was full of rackets, balls and other objects"], hyper="entity", domains="factotum"),
    d("whole", "n", "whole|unit",
      "an assemblage of parts that is regarded as a single entity",
      ["how big is that part compared to the whole?"], hyper="physical_object"),
    d("living_thing", "n", "living_thing|animate_thing",
      "a living (or once living) entity", hyper="whole"),
    d("organism", "n", "organism|being",
      "a living thing that has (or can develop) the ability to act or function independently",
      hyper="living_thing"),
    d("person", "n", "person|individual|someone|somebody|mortal|soul",
      "a human being", ["there was too much for one person to do"],
      hyper="organism", domains="factotum"),
    d("animal", "n", "animal|animate_being|beast|brute|creature|fauna",
      "a living organism characterized by voluntary movement", hyper="organism",
      domains="animals"),
    d("plant_organism", "n", "plant|flora|plant_life",
      "(botany) a living organism lacking the power of locomotion", hyper="organism",
      domains="plants"),
    d("artifact", "n", "artifact|artefact",
      "a man-made object taken as a whole", hyper="whole", domains="factotum"),
    d("structure", "n", "structure|construction",
      "a thing constructed; a complex entity constructed of many parts",
      ["the structure consisted of a series of arches"], hyper="artifact"),
    d("building", "n", "building|edifice",
      "a structure that has a roof and walls and stands more or less permanently in one place",
      ["there was a three-story building on the corner", "it was an imposing edifice"],
      hyper="structure", domains="buildings"),
    d("instrumentality", "n", "instrumentality|instrumentation",
      "an artifact (or system of artifacts) that is instrumental in accomplishing some end",
      hyper="artifact"),
    d("furniture", "n", "furniture|piece_of_furniture|article_of_furniture",
      "furnishings that make a room or other area ready for occupancy",
      ["they had too much furniture for the small apartment",
       "there was only one piece of furniture in the room"],
      hyper="instrumentality", domains="furniture"),
    d("device", "n", "device",
      "an instrumentality invented for a particular purpose",
      ["the device is small enough to wear on your wrist"], hyper="instrumentality"),
    d("container", "n", "container",
      "any object that can be used to hold things", hyper="instrumentality"),
    d("conveyance", "n", "conveyance|transport",
      "something that serves as a means of transportation", hyper="instrumentality"),
    d("vehicle", "n", "vehicle",
      "a conveyance that transports people or objects", hyper="conveyance"),
    d("location", "n", "location",
      "a point or extent in space", hyper="physical_object", domains="factotum"),
    d("region", "n", "region",
      "the extended spatial location of something",
      ["the farming regions of France"], hyper="location", domains="geography"),
    d("area", "n", "area|country",
      "a particular geographical region of indefinite boundary",
      ["it was a mountainous area"], hyper="region", domains="geography"),
    d("land", "n", "land|dry_land|earth|ground|solid_ground|terra_firma",
      "the solid part of the earth's surface",
      ["the plane turned away from the sea and moved back over land"],
      hyper="physical_object", domains="geography"),
    d("water_liquid", "n", "water|H2O",
      "binary compound that occurs at room temperature as a clear colorless odorless liquid",
      ["he asked for a drink of water"], hyper="liquid", domains="chemistry"),
    d("body_of_water", "n", "body_of_water|water",
      "the part of the earth's surface covered with water (such as a river or lake or ocean)",
      ["they invaded our territorial waters"], hyper="physical_object", domains="geography"),
    d("geological_formation", "n", "geological_formation|formation",
      "(geology) the geological features of the earth", hyper="physical_object",
      domains="geology"),
    d("substance", "n", "substance|matter",
      "the real physical matter of which a person or thing consists", hyper="entity"),
    d("liquid", "n", "liquid",
      "a substance that is liquid at room temperature and pressure", hyper="substance"),
    d("event", "n", "event",
      "something that happens at a given place and time", hyper="entity", domains="factotum"),
    d("act", "n", "act|deed|human_action|human_activity",
      "something that people do or cause to happen", hyper="event"),
    d("action", "n", "action",
      "something done (usually as opposed to something said)",
      ["there were stories of murders and other unnatural actions"], hyper="act"),
    d("activity", "n", "activity",
      "any specific behavior", ["they avoided all recreational activity"], hyper="act"),
    d("state", "n", "state",
      "the way something is with respect to its main attributes",
      ["the current state of knowledge"], hyper="entity"),
    d("condition", "n", "condition|status",
      "a state at a particular time", ["a condition (or state) of disrepair"], hyper="state"),
    d("feeling", "n", "feeling",
      "the experiencing of affective and emotional states", hyper="state"),
    d("attribute", "n", "attribute",
      "an abstraction belonging to or characteristic of an entity", hyper="entity"),
    d("quality", "n", "quality",
      "an essential and distinguishing attribute of something or someone",
      ["the quality of mercy is not strained"], hyper="attribute"),
    d("cognition", "n", "cognition|knowledge|noesis",
      "the psychological result of perception and learning and reasoning", hyper="entity"),
    d("communication", "n", "communication",
      "something that is communicated by or to or between people or groups", hyper="entity"),
    d("message", "n", "message|content",
      "what a communication that is about something is about", hyper="communication"),
    d("writing", "n", "writing|written_material|piece_of_writing",
      "the work of a writer; anything expressed in letters of the alphabet",
      ["the writing in her novels is excellent"], hyper="communication", domains="literature"),
    d("document", "n", "document|written_document|papers",
      "writing that provides information (especially information of an official nature)",
      hyper="writing"),
    d("group", "n", "group|grouping",
      "any number of entities (members) considered as a unit", hyper="entity",
      domains="factotum"),
    d("gathering", "n", "gathering|assemblage",
      "a group of persons together in one place", hyper="group"),
    d("organization", "n", "organization|organisation",
      "a group of people who work together", hyper="group"),
    d("unit_social", "n", "unit|social_unit",
      "an organization regarded as part of a larger social group",
      ["the coach said the offensive unit did a good job"], hyper="organization"),
    d("assembly", "n", "assembly",
      "a group of persons who are gathered together for a common purpose", hyper="gathering"),
    d("legislature", "n", "legislature|legislative_assembly|law-makers",
      "persons who make or amend or repeal laws", hyper="assembly", domains="politics"),
    d("family_line", "n", "family|family_line|folk|kinfolk|sept",
      "people descended from a common ancestor",
      ["his family has lived in Massachusetts since the Mayflower"], hyper="group"),
    d("period", "n", "period|period_of_time|time_period",
      "an amount of time", ["a time period of 30 years"], hyper="attribute",
      domains="time_period"),

    # the fourteen senses of "house"
    d("house.dwelling", "n", "house",
      "a dwelling that serves as living quarters for one or more families",
      ["he has a house on Cape Cod", "she felt she had to get out of the house"],
      hyper="building", part_mer=["kitchen", "porch"]),
    d("house.firm", "n", "house|firm|business_firm",
      "the members of a business organization that owns or operates one or more establishments",
      ["he worked for a brokerage house"], hyper="organization", domains="economy"),
    d("house.religious", "n", "house",
      "the members of a religious community living together",
      ["the preacher addressed the house on two occasions"], hyper="organization",
      domains="religion"),
    d("house.audience", "n", "house",
      "the audience gathered together in a theatre or cinema",
      ["the house applauded", "he counted the house"], hyper="gathering",
      domains="theatre"),
    d("house.assembly", "n", "house",
      "an official assembly having legislative powers",
      ["a bicameral legislature has two houses"], hyper="assembly", domains="politics"),
    d("house.lineage", "n", "house",
      "aristocratic family line", ["the House of York"], hyper="family_line",
      domains="history"),
    d("house.play", "n", "house",
      "play in which children take the roles of father or mother or children and pretend to interact like adults",
      ["the children were playing house"], hyper="activity", domains="play"),
    d("house.zodiac", "n", "house|sign_of_the_zodiac|star_sign|sign",
      "(astrology) one of 12 equal areas into which the zodiac is divided",
      hyper="region", domains="astrology"),
    d("house.gambling", "n", "house",
      "the management of a gambling house or casino",
      ["the house gets a percentage of every bet"], hyper="organization", domains="play"),
    d("house.social_unit", "n", "house|family|household|home|menage",
      "a social unit living together",
      ["it was a good Christian household", "I waited until the whole house was asleep"],
      hyper="unit_social"),
    d("house.theater", "n", "house|theater|theatre",
      "a building where theatrical performances or motion-picture shows can be presented",
      ["the house was full"], hyper="building", domains="theatre"),
    d("house.shelter", "n", "house",
      "a building in which something is sheltered or located",
      ["they had a large carriage house"], hyper="building"),

    # civic life
    d("parliament", "n", "parliament",
      "a legislative assembly in certain countries", hyper="house.assembly",
      domains="politics law"),
    d("senate", "n", "senate",
      "an assembly possessing high legislative powers", hyper="house.assembly",
      domains="politics"),
    d("council", "n", "council",
      "a body serving in an administrative capacity", ["student council"],
      hyper="assembly", domains="politics"),
    d("committee", "n", "committee|commission",
      "a special group delegated to consider some matter",
      ["a committee is a group that keeps minutes and loses hours"],
      hyper="organization", domains="politics"),
    d("government", "n", "government|authorities|regime",
      "the organization that is the governing authority of a political unit",
      ["the government reduced taxes"], hyper="organization", domains="politics"),
    d("election", "n", "election",
      "a vote to select the winner of a position or political office",
      ["the results of the election will be announced tonight"], hyper="vote_n",
      domains="politics"),
    d("vote_n", "n", "vote",
      "a choice that is made by counting the number of people in favor of each alternative",
      ["they allowed just one vote per person"], hyper="act", domains="politics"),
    d("electorate", "n", "electorate",
      "the body of enfranchised citizens; those qualified to vote", hyper="group",
      domains="politics"),
    d("state_political", "n", "state|nation|country|commonwealth|land",
      "a politically organized body of people under a single government",
      ["the state has elected a new president"], hyper="organization",
      domains="politics geography"),
    d("leader", "n", "leader",
      "a person who rules or guides or inspires others", hyper="person"),
    d("president", "n", "president",
      "the chief executive of a republic", hyper="leader", domains="politics"),
    d("king", "n", "king|male_monarch|Rex",
      "a male sovereign; ruler of a kingdom", hyper="leader", domains="politics history"),
    d("queen", "n", "queen|female_monarch",
      "a female sovereign; ruler of a kingdom", hyper="leader", domains="politics history"),
    d("card", "n", "card",
      "one of a set of small pieces of stiff paper marked in various ways and used for playing games",
      hyper="artifact", domains="play"),
    d("king_card", "n", "king",
      "one of the four playing cards in a deck bearing the picture of a king",
      hyper="card", domains="play"),
    d("representative", "n", "representative",
      "a person who represents others", hyper="person", domains="politics"),
    d("member", "n", "member|fellow_member",
      "one of the persons who compose a social group",
      ["only members will be admitted", "they elected him a member of the club"],
      hyper="person"),
    d("word_n", "n", "word",
      "a unit of language that native speakers can identify",
      ["words are the blocks from which sentences are made"], hyper="communication",
      domains="linguistics"),
    d("term_period", "n", "term",
      "a limited period of time", ["a prison term", "he left school before the end of term"],
      hyper="period"),
    d("term_word", "n", "term",
      "a word or expression used for some particular thing",
      ["he learned many medical terms"], hyper="word_n"),
    d("office_room", "n", "office|business_office",
      "place of business where professional or clerical duties are performed",
      ["he rented an office in the new building"], hyper="building"),
    d("office_position", "n", "office|position|berth|post|situation|place|spot",
      "a job in an organization", ["he occupied a post in the treasury"],
      hyper="occupation"),
    d("occupation", "n", "occupation|business|job|line_of_work|line",
      "the principal activity in your life that you do to earn money",
      ["he's not in my line of business"], hyper="activity"),

    # places
    d("city", "n", "city|metropolis|urban_center",
      "a large and densely populated urban area", ["Ancient Troy was a great city"],
      hyper="region", domains="geography"),
    d("town", "n", "town",
      "an urban area with a fixed boundary that is smaller than a city",
      hyper="region", domains="geography"),
    d("village", "n", "village|small_town|settlement",
      "a community of people smaller than a town", hyper="region", domains="geography"),
    d("castle", "n", "castle",
      "a large building formerly occupied by a ruler and fortified against attack",
      hyper="building", domains="history buildings"),
    d("church", "n", "church|church_building",
      "a place for public (especially Christian) worship", hyper="building",
      domains="religion buildings"),
    d("tower", "n", "tower",
      "a structure taller than its diameter", hyper="structure", domains="buildings"),
    d("wall", "n", "wall",
      "an architectural partition with a height and length greater than its thickness",
      hyper="structure", domains="buildings"),
    d("gate", "n", "gate",
      "a movable barrier in a fence or wall", hyper="structure"),
    d("bridge_structure", "n", "bridge|span",
      "a structure that allows people or vehicles to cross an obstacle such as a river or canal",
      hyper="structure", domains="buildings"),
    d("road", "n", "road|route",
      "an open way (generally public) for travel or transportation",
      hyper="artifact", domains="transport"),
    d("path", "n", "path|track",
      "a way especially designed for a particular use", hyper="artifact"),
    d("harbor", "n", "harbor|harbour|haven|seaport",
      "a sheltered port where ships can take on or discharge cargo",
      hyper="location", domains="nautical"),
    d("island", "n", "island",
      "a land mass (smaller than a continent) that is surrounded by water",
      hyper="land", domains="geography"),
    d("valley", "n", "valley|vale",
      "a long depression in the surface of the land that usually contains a river",
      hyper="geological_formation", domains="geography"),
    d("mountain", "n", "mountain|mount",
      "a land mass that projects well above its surroundings; higher than a hill",
      hyper="geological_formation", domains="geography"),
    d("hill", "n", "hill",
      "a local and well-defined elevation of the land",
      ["they loved to roam the hills of West Virginia"],
      hyper="geological_formation", domains="geography"),
    d("stream", "n", "stream|watercourse",
      "a natural body of running water flowing on or under the earth",
      hyper="body_of_water", domains="geography"),
    d("river", "n", "river",
      "a large natural stream of water (larger than a creek)",
      ["the river was navigable for 50 miles"], hyper="stream", domains="geography"),
    d("lake", "n", "lake",
      "a body of (usually fresh) water surrounded by land", hyper="body_of_water",
      domains="geography"),
    d("sea", "n", "sea",
      "a division of an ocean or a large body of salt water partially enclosed by land",
      hyper="body_of_water", domains="geography"),
    d("ocean", "n", "ocean",
      "a large body of water constituting a principal part of the hydrosphere",
      hyper="body_of_water", domains="geography"),
    d("forest", "n", "forest|wood|woods",
      "the trees and other plants in a large densely wooded area", hyper="region",
      domains="plants"),
    d("field_land", "n", "field",
      "a piece of land cleared of trees and usually enclosed",
      ["he planted a field of wheat"], hyper="region"),
    d("field_study", "n", "field|study|discipline|subject|subject_area|field_of_study",
      "a branch of knowledge", ["in what field is he working?"], hyper="cognition"),
    d("garden", "n", "garden",
      "a plot of ground where plants are cultivated", hyper="area", domains="plants"),
    d("market", "n", "market|marketplace|mart",
      "the world of commercial activity where goods and services are bought and sold",
      hyper="activity", domains="commerce"),
    d("shop", "n", "shop|store",
      "a mercantile establishment for the retail sale of goods or services",
      ["he bought it at a shop on Cape Cod"], hyper="building", domains="commerce"),
    d("factory", "n", "factory|mill|manufacturing_plant",
      "a plant consisting of one or more buildings with facilities for manufacturing",
      hyper="building", domains="industry"),
    d("plant_industrial", "n", "plant|works|industrial_plant",
      "buildings for carrying on industrial labor",
      ["they built a large plant to manufacture automobiles"], hyper="building",
      domains="industry"),
    d("bank_slope", "n", "bank",
      "sloping land (especially the slope beside a body of water)",
      ["they pulled the canoe up on the bank",
       "he sat on the bank of the river and watched the currents"],
      hyper="geological_formation", domains="geography"),
    d("bank_institution", "n", "bank|depository_financial_institution|banking_concern|banking_company",
      "a financial institution that accepts deposits and channels the money into lending activities",
      ["he cashed a check at the bank", "that bank holds the mortgage on my home"],
      hyper="organization", domains="economy banking"),
    d("room", "n", "room",
      "an area within a building enclosed by walls and floor and ceiling",
      ["the rooms were very small but they had a nice view"], hyper="area",
      domains="buildings"),
    d("kitchen", "n", "kitchen",
      "a room equipped for preparing meals", hyper="room", domains="buildings"),
    d("porch", "n", "porch",
      "a structure attached to the exterior of a building often forming a covered entrance",
      hyper="structure", domains="buildings"),
    d("bedroom", "n", "bedroom|sleeping_room|sleeping_accommodation|chamber|bedchamber",
      "a room used primarily for sleeping", hyper="room", part_mer=["bed_furniture"],
      domains="buildings"),

    # people
    d("farmer", "n", "farmer|husbandman|granger",
      "a person who operates a farm", hyper="person", domains="agriculture"),
    d("worker", "n", "worker",
      "a person who works at a specific occupation", ["he is a good worker"],
      hyper="person"),
    d("teacher", "n", "teacher|instructor",
      "a person whose occupation is teaching", hyper="person", domains="school pedagogy"),
    d("student", "n", "student|pupil|educatee",
      "a learner who is enrolled in an educational institution", hyper="person",
      domains="school"),
    d("doctor", "n", "doctor|doc|physician|MD|medico",
      "a licensed medical practitioner", ["I felt so bad I went to see my doctor"],
      hyper="person", domains="medicine"),
    d("nurse", "n", "nurse",
      "one skilled in caring for young children or the sick", hyper="person",
      domains="medicine"),
    d("scientist", "n", "scientist",
      "a person with advanced knowledge of one or more sciences", hyper="person"),
    d("engineer", "n", "engineer|applied_scientist|technologist",
      "a person who uses scientific knowledge to solve practical problems",
      hyper="person", domains="industry"),
    d("artist", "n", "artist|creative_person",
      "a person whose creative work shows sensitivity and imagination", hyper="person",
      domains="art"),
    d("performer", "n", "performer|performing_artist",
      "an entertainer who performs a dramatic or musical work for an audience",
      hyper="person", domains="theatre"),
    d("soldier", "n", "soldier",
      "an enlisted man or woman who serves in an army",
      ["the soldiers stood at attention"], hyper="person", domains="military"),
    d("guard", "n", "guard",
      "a person who keeps watch over something or someone", hyper="person"),
    d("merchant", "n", "merchant|merchandiser",
      "a businessperson engaged in retail trade", hyper="person", domains="commerce"),
    d("sailor", "n", "sailor|crewman",
      "any member of a ship's crew", hyper="person", domains="nautical"),
    d("child", "n", "child|kid|youngster|minor|nipper",
      "a young person of either sex",
      ["she writes books for children", "they're just kids"], hyper="person"),
    d("man", "n", "man|adult_male",
      "an adult person who is male (as opposed to a woman)",
      ["there were two women and six men on the bus"], hyper="person"),
    d("woman", "n", "woman|adult_female",
      "an adult female person (as opposed to a man)",
      ["the woman kept house while the man hunted"], hyper="person"),
    d("player", "n", "player|participant",
      "a person who participates in or is skilled at some game", hyper="person",
      domains="sport play"),
    d("army", "n", "army|regular_army|ground_forces",
      "a permanent organization of the military land forces of a nation or state",
      hyper="organization", domains="military"),
    d("team", "n", "team|squad",
      "a cooperative unit (especially in sports)", hyper="unit_social", domains="sport"),
    d("crowd", "n", "crowd",
      "a large number of things or people considered together",
      ["a crowd of insects assembled around the flowers"], hyper="gathering"),

    # artifacts and objects
    d("seat_furniture", "n", "seat",
      "furniture that is designed for sitting on",
      ["there were not enough seats for all the guests"], hyper="furniture",
      domains="furniture"),
    d("chair", "n", "chair",
      "a seat for one person, with a support for the back",
      hyper="seat_furniture", part_mer=["back_rest", "seat_part"], domains="furniture"),
    d("support_n", "n", "support",
      "any device that bears the weight of another thing", hyper="device"),
    d("back_rest", "n", "back|backrest",
      "a support that you can lean against while sitting",
      ["the back of the dental chair was adjustable"], hyper="support_n"),
    d("part", "n", "part|portion|component_part|component",
      "something determined in relation to something that includes it",
      ["he wanted to feel a part of something bigger than himself"],
      hyper="physical_object", domains="factotum"),
    d("seat_part", "n", "seat",
      "the part of something (as a car or chair) on which a person sits", hyper="part"),
    d("seat_space", "n", "seat|place",
      "a space reserved for sitting (as in a theater or on a train or airplane)",
      ["he booked their seats in advance"], hyper="location"),
    d("bed_furniture", "n", "bed",
      "a piece of furniture that provides a place to sleep",
      ["he sat on the edge of the bed"], hyper="furniture", domains="furniture"),
    d("bed_bottom", "n", "bed|bottom",
      "a depression forming the ground under a body of water",
      ["he searched for treasure on the ocean bed"], hyper="geological_formation",
      domains="geography"),
    d("table", "n", "table",
      "a piece of furniture having a smooth flat top that is usually supported by one or more vertical legs",
      ["it was a sturdy table"], hyper="furniture", domains="furniture"),
    d("door", "n", "door",
      "a swinging or sliding barrier that will close the entrance to a room or building or vehicle",
      ["he knocked on the door"], hyper="structure"),
    d("window", "n", "window",
      "a framework of wood or metal that contains a glass windowpane and is built into a wall",
      hyper="structure", domains="buildings"),
    d("car", "n", "car|auto|automobile|machine|motorcar",
      "a motor vehicle with four wheels; usually propelled by an internal combustion engine",
      ["he needs a car to get to work"], hyper="vehicle", domains="transport"),
    d("machine_device", "n", "machine",
      "any mechanical or electrical device that transmits or modifies energy to perform or assist in the performance of human tasks",
      hyper="device", domains="industry"),
    d("train", "n", "train|railroad_train",
      "public transport provided by a line of railway cars coupled together and drawn by a locomotive",
      ["express trains don't stop at Princeton Junction"], hyper="vehicle",
      domains="transport railway"),
    d("vessel_craft", "n", "vessel|watercraft",
      "a craft designed for water transportation", hyper="vehicle", domains="nautical"),
    d("ship", "n", "ship",
      "a vessel that carries passengers or freight", hyper="vessel_craft",
      domains="nautical"),
    d("boat", "n", "boat",
      "a small vessel for travel on water", ["they invited him to go on a boat trip"],
      hyper="vessel_craft", domains="nautical"),
    d("vessel_container", "n", "vessel",
      "an object used as a container (especially for liquids)", hyper="container"),
    d("weapon", "n", "weapon|arm|weapon_system",
      "any instrument or instrumentality used in fighting or hunting",
      ["he was licensed to carry a weapon"], hyper="instrumentality", domains="military"),
    d("sword", "n", "sword|blade|brand|steel",
      "a cutting or thrusting weapon that has a long metal blade", hyper="weapon",
      domains="military"),
    d("gun", "n", "gun",
      "a weapon that discharges a missile at high velocity", hyper="weapon",
      domains="military"),
    d("tool", "n", "tool",
      "an implement used in the practice of a vocation", hyper="instrumentality"),
    d("book", "n", "book",
      "a written work or composition that has been published (printed on pages bound together)",
      ["I am reading a good book on economics"], hyper="writing", domains="literature"),
    d("letter_message", "n", "letter|missive",
      "a written message addressed to a person or organization",
      ["mailed an indignant letter to the editor"], hyper="document"),
    d("letter_character", "n", "letter|letter_of_the_alphabet|alphabetic_character",
      "the conventional characters of the alphabet used to represent speech",
      ["his grandmother taught him his letters"], hyper="communication",
      domains="linguistics"),
    d("paper_material", "n", "paper",
      "a material made of cellulose pulp derived mainly from wood or rags or certain grasses",
      hyper="substance", domains="industry"),
    d("newspaper", "n", "newspaper|paper",
      "a daily or weekly publication on folded sheets; contains news and articles and advertisements",
      ["he read his newspaper at breakfast"], hyper="writing", domains="press"),
    d("medium_of_exchange", "n", "medium_of_exchange|monetary_system",
      "anything that is generally accepted as a standard of value and a measure of wealth",
      hyper="instrumentality", domains="economy"),
    d("money", "n", "money",
      "the most common medium of exchange; functions as legal tender",
      ["we tried to collect the money he owed us"], hyper="medium_of_exchange",
      domains="economy"),
    d("currency", "n", "currency",
      "the metal or paper medium of exchange that is presently used",
      hyper="medium_of_exchange", domains="economy numismatics"),
    d("coin", "n", "coin",
      "a flat metal piece (usually a disc) used as money", hyper="currency",
      domains="numismatics economy"),
    d("sum_money", "n", "sum|amount|total",
      "a quantity of money", ["he borrowed a large sum"], hyper="money",
      domains="economy"),
    d("metal", "n", "metal|metallic_element",
      "any of several chemical elements that are usually shiny solids", hyper="substance",
      domains="chemistry"),
    d("gold", "n", "gold|Au|atomic_number_79",
      "a soft yellow malleable ductile metallic element", hyper="metal",
      domains="chemistry economy"),
    d("movie", "n", "movie|film|picture|moving_picture|pic",
      "a form of entertainment that enacts a story by sound and a sequence of images",
      ["they went to a movie every Saturday night"], hyper="communication",
      domains="cinema theatre"),
    d("painting", "n", "painting|picture",
      "graphic art consisting of an artistic composition made by applying paints to a surface",
      ["a small painting by Picasso"], hyper="artifact", domains="painting art"),
    d("music", "n", "music",
      "an artistic form of auditory communication incorporating instrumental or vocal tones",
      hyper="communication", domains="music"),
    d("song", "n", "song|vocal",
      "a short musical composition with words",
      ["a successful musical must have at least three good songs"], hyper="music",
      domains="music"),
    d("concert", "n", "concert",
      "a performance of music by players or singers not involving theatrical staging",
      hyper="event", domains="music"),
    d("musical_instrument", "n", "musical_instrument|instrument",
      "any of various devices or contrivances that can be used to produce musical tones or sounds",
      hyper="device", domains="music"),
    d("guitar", "n", "guitar",
      "a stringed instrument usually having six strings; played by strumming or plucking",
      hyper="musical_instrument", domains="music"),
    d("piano", "n", "piano|pianoforte|forte-piano",
      "a keyboard instrument that is played by depressing keys that cause hammers to strike tuned strings",
      hyper="musical_instrument", domains="music"),

    # games, contests, conflict
    d("game", "n", "game",
      "an amusement or pastime",
      ["they played word games", "he thought of his painting as a game that filled his life"],
      hyper="activity", domains="play"),
    d("game_animal", "n", "game",
      "animal hunted for food or sport", hyper="animal", domains="hunting"),
    d("sport", "n", "sport|athletics",
      "an active diversion requiring physical exertion and competition", hyper="activity",
      domains="sport"),
    d("football_game", "n", "football|football_game",
      "any of various games played with a ball in which two teams try to kick or carry or propel the ball into each other's goal",
      hyper="sport", domains="football"),
    d("ball", "n", "ball",
      "round object that is hit or thrown or kicked in games",
      ["the ball travelled 90 mph"], hyper="physical_object", domains="play"),
    d("football_ball", "n", "football",
      "the inflated oblong ball used in playing American football", hyper="ball",
      domains="football"),
    d("contest", "n", "contest|competition",
      "an occasion on which a winner is selected from among two or more contestants",
      hyper="event"),
    d("match_contest", "n", "match",
      "a formal contest in which two or more persons or teams compete",
      ["the team lost the match"], hyper="contest", domains="sport"),
    d("match_lighter", "n", "match|lucifer|friction_match",
      "lighter consisting of a thin piece of wood or cardboard tipped with combustible chemical; ignites with friction",
      ["he struck a match and lit his pipe"], hyper="device"),
    d("battle", "n", "battle|conflict|fight|engagement",
      "a hostile meeting of opposing military forces in the course of a war",
      ["Grant won a decisive victory in the battle of Chickamauga"], hyper="event",
      domains="military"),
    d("war", "n", "war|warfare",
      "the waging of armed conflict against an enemy",
      ["thousands of people were killed in the war"], hyper="event", domains="military"),
    d("victory", "n", "victory|triumph",
      "a successful ending of a struggle or contest",
      ["the general always gets credit for his army's victory"], hyper="event"),
    d("prize", "n", "prize|award",
      "something given for victory or superiority in a contest or competition",
      hyper="physical_object"),
    d("court_royal", "n", "court|royal_court",
      "the family and retinue of a sovereign or prince", hyper="gathering",
      domains="history"),
    d("court_tribunal", "n", "court|tribunal|judicature",
      "an assembly (including one or more judges) to conduct judicial business",
      hyper="assembly", domains="law"),
    d("court_field", "n", "court",
      "a specially marked horizontal area within which a game is played",
      ["players had to reserve a court in advance"], hyper="area", domains="sport"),

    # nature
    d("tree", "n", "tree",
      "a tall perennial woody plant having a main trunk and branches forming a distinct elevated crown",
      hyper="plant_organism", domains="plants"),
    d("flower", "n", "flower|bloom|blossom",
      "a plant cultivated for its blooms or blossoms", hyper="plant_organism",
      domains="plants"),
    d("grass", "n", "grass",
      "narrow-leaved green herbage; grown as lawns", hyper="plant_organism",
      domains="plants"),
    d("wheat", "n", "wheat",
      "annual or biennial grass having erect flower spikes and light brown grains",
      hyper="plant_organism", domains="plants gastronomy"),
    d("dog", "n", "dog|domestic_dog|Canis_familiaris",
      "a member of the genus Canis that has been domesticated by man since prehistoric times",
      ["the dog barked all night"], hyper="animal", domains="animals"),
    d("cat", "n", "cat|true_cat",
      "feline mammal usually having thick soft fur and no ability to roar",
      hyper="animal", domains="animals"),
    d("horse", "n", "horse|Equus_caballus",
      "solid-hoofed herbivorous quadruped domesticated since prehistoric times",
      ["he rode his horse to town"], hyper="animal", domains="animals"),
    d("bird", "n", "bird",
      "warm-blooded egg-laying vertebrates characterized by feathers and forelimbs modified as wings",
      hyper="animal", domains="animals"),
    d("fish", "n", "fish",
      "any of various mostly cold-blooded aquatic vertebrates usually having scales",
      ["the shark is a large fish"], hyper="animal", domains="animals"),
    d("crane_bird", "n", "crane",
      "large long-necked wading bird of marshes and plains in many parts of the world",
      hyper="bird", domains="animals"),
    d("crane_machine", "n", "crane",
      "lifts and moves heavy objects; lifting tackle is suspended from a pivoted boom that rotates around a vertical axis",
      hyper="machine_device", domains="industry"),
    d("celestial_body", "n", "celestial_body|heavenly_body",
      "natural objects visible in the sky", hyper="physical_object", domains="astronomy"),
    d("star_celestial", "n", "star",
      "(astronomy) a celestial body of hot gases that radiates energy derived from thermonuclear reactions in the interior",
      hyper="celestial_body", domains="astronomy"),
    d("star_performer", "n", "star|principal|lead",
      "an actor who plays a principal role", hyper="performer", domains="theatre"),
    d("sun", "n", "sun",
      "the star that is the source of light and heat for the planets in the solar system",
      ["the sun contains most of the mass in the solar system"], hyper="star_celestial",
      domains="astronomy"),
    d("moon", "n", "moon",
      "the natural satellite of the Earth",
      ["the average distance to the moon is 384,400 kilometers"], hyper="celestial_body",
      domains="astronomy"),
    d("planet", "n", "planet",
      "(astronomy) any of the large celestial bodies in the solar system that revolve around the sun",
      hyper="celestial_body", domains="astronomy"),
    d("world", "n", "world|Earth|globe",
      "the 3rd planet from the sun; the planet we live on",
      ["the Earth moves around the sun"], hyper="planet", domains="astronomy geography"),
    d("energy", "n", "energy|free_energy",
      "(physics) a thermodynamic quantity equivalent to the capacity of a physical system to do work",
      hyper="entity", domains="physics"),
    d("light_energy", "n", "light|visible_light|visible_radiation",
      "(physics) electromagnetic radiation that can produce a visual sensation",
      ["the light was filtered through a soft glass window"], hyper="energy",
      domains="physics"),
    d("light_lamp", "n", "light|light_source",
      "any device serving as a source of illumination",
      ["he stopped the car and turned off the lights"], hyper="device"),
    d("heat", "n", "heat|heat_energy",
      "a form of energy that is transferred by a difference in temperature",
      hyper="energy", domains="physics"),
    d("rain", "n", "rain|rainfall",
      "water falling in drops from vapor condensed in the atmosphere", hyper="event",
      domains="meteorology"),
    d("snow", "n", "snow|snowfall",
      "precipitation falling from clouds in the form of ice crystals", hyper="event",
      domains="meteorology"),
    d("wind", "n", "wind|air_current|current_of_air",
      "air moving (sometimes with considerable force) from an area of high pressure to an area of low pressure",
      ["trees bent under the fierce winds"], hyper="event", domains="meteorology"),
    d("storm", "n", "storm|violent_storm",
      "a violent weather condition with winds of great speed", hyper="event",
      domains="meteorology"),
    d("fire", "n", "fire",
      "the event of something burning (often destructive)",
      ["they lost everything in the fire"], hyper="event"),
    d("season", "n", "season|time_of_year",
      "one of the natural periods into which the year is divided",
      ["the regular sequence of the seasons"], hyper="period", domains="time_period"),
    d("spring_season", "n", "spring|springtime",
      "the season of growth", hyper="season", domains="time_period"),
    d("spring_water", "n", "spring|fountain|outflow|outpouring|natural_spring",
      "a natural flow of ground water",
      ["the spring was a popular resting place for travelers"],
      hyper="geological_formation", domains="geography"),
    d("spring_coil", "n", "spring",
      "a metal elastic device that returns to its shape when stretched", hyper="device"),
    d("time_abstract", "n", "time",
      "the continuum of experience in which events pass from the future through the present to the past",
      hyper="attribute", domains="time_period factotum"),
    d("year", "n", "year|twelvemonth|yr",
      "a period of time containing 365 (or 366) days", ["she is 4 years old"],
      hyper="period", domains="time_period"),
    d("month", "n", "month",
      "one of the twelve divisions of the calendar year", ["he paid the bill last month"],
      hyper="period", domains="time_period"),
    d("day", "n", "day|twenty-four_hours|twenty-four_hour_period",
      "time for Earth to make a complete rotation on its axis",
      ["two days later they left"], hyper="period", domains="time_period"),
    d("night", "n", "night|nighttime|dark",
      "the time after sunset and before sunrise while it is dark outside",
      hyper="period", domains="time_period"),
    d("morning", "n", "morning|morn|forenoon",
      "the time period between dawn and noon", ["I spent the morning running errands"],
      hyper="period", domains="time_period"),

    # food
    d("food", "n", "food|nutrient",
      "any substance that can be metabolized by an animal to give energy and build tissue",
      hyper="substance", domains="gastronomy"),
    d("bread", "n", "bread|breadstuff|staff_of_life",
      "food made from dough of flour or meal and usually raised with yeast and then baked",
      hyper="food", domains="gastronomy"),
    d("fruit", "n", "fruit",
      "the ripened reproductive body of a seed plant", hyper="food",
      domains="plants gastronomy"),
    d("apple", "n", "apple",
      "fruit with red or yellow or green skin and sweet to tart crisp whitish flesh",
      hyper="fruit", domains="gastronomy plants"),
    d("meat", "n", "meat",
      "the flesh of animals (including fishes and birds) used as food", hyper="food",
      domains="gastronomy"),
    d("beverage", "n", "beverage|drink|drinkable|potable",
      "any liquid suitable for drinking", hyper="food", domains="gastronomy"),
    d("wine", "n", "wine|vino",
      "fermented juice (of grapes especially)",
      ["the dinner was accompanied by a fine wine"], hyper="beverage",
      domains="gastronomy"),
    d("milk", "n", "milk",
      "a white nutritious liquid secreted by mammals and used as food by human beings",
      hyper="beverage", domains="gastronomy"),

    # health, learning, abstractions
    d("illness", "n", "illness|unwellness|malady|sickness",
      "impairment of normal physiological function affecting part or all of an organism",
      hyper="condition", domains="medicine"),
    d("medicine_drug", "n", "medicine|medication|medicament|medicinal_drug",
      "(medicine) something that treats or prevents or alleviates the symptoms of disease",
      hyper="substance", domains="medicine pharmacy"),
    d("medicine_field", "n", "medicine|practice_of_medicine",
      "the learned profession that is mastered by graduate training in a medical school",
      hyper="occupation", domains="medicine"),
    d("hospital", "n", "hospital|infirmary",
      "a health facility where patients receive treatment", hyper="building",
      domains="medicine"),
    d("school", "n", "school",
      "a building where young people receive education", ["the school was built in 1932"],
      hyper="building", domains="school"),
    d("university", "n", "university",
      "a large and diverse institution of higher learning", hyper="organization",
      domains="school"),
    d("library", "n", "library",
      "a building that houses a collection of books and other materials",
      hyper="building", domains="literature buildings"),
    d("museum", "n", "museum",
      "a depository for collecting and displaying objects having scientific or historical or artistic value",
      hyper="building", domains="art history"),
    d("lesson", "n", "lesson",
      "a unit of instruction", ["he took driving lessons"], hyper="communication",
      domains="school"),
    d("question_n", "n", "question|inquiry|enquiry|query|interrogation",
      "an instance of questioning", ["there was a question about my training"],
      hyper="communication"),
    d("answer_n", "n", "answer|reply|response",
      "a statement (either spoken or written) that is made to reply to a question",
      ["I waited several days for his answer"], hyper="communication"),
    d("story", "n", "story|narrative|narration|tale",
      "a message that tells the particulars of an act or occurrence",
      ["he writes stories for the magazines"], hyper="message", domains="literature"),
    d("news", "n", "news|intelligence|tidings|word",
      "information about recent and important events", ["they awaited news of the outcome"],
      hyper="communication", domains="press"),
    d("name", "n", "name",
      "a language unit by which a person or thing is known",
      ["his name really is George Washington"], hyper="communication"),
    d("number_n", "n", "number|figure",
      "the property possessed by a sum or total or indefinite quantity of units or individuals",
      ["the number of parameters is small"], hyper="attribute", domains="mathematics"),
    d("piece", "n", "piece",
      "a separate part of a whole", ["an important piece of the evidence"], hyper="part"),
    d("power_ability", "n", "power|powerfulness",
      "possession of controlling influence", ["the deterrent power of nuclear weapons"],
      hyper="quality"),
    d("work_activity", "n", "work",
      "activity directed toward making or doing something",
      ["she checked several points needing further work"], hyper="activity"),
    d("work_product", "n", "work|piece_of_work",
      "a product produced or accomplished through the effort or activity or agency of a person or thing",
      ["it is not regarded as one of his more memorable works"], hyper="artifact"),
    d("task", "n", "job|task|chore",
      "a specific piece of work required to be done",
      ["estimates of the city's loss on that job ranged as high as a million dollars"],
      hyper="activity"),
    d("journey", "n", "journey|journeying",
      "the act of traveling from one place to another", hyper="act", domains="tourism"),
    d("visit", "n", "visit",
      "the act of going to see some person or place or thing for a short time",
      ["he dropped by for a visit"], hyper="act"),
    d("trade", "n", "trade|patronage",
      "the commercial exchange (buying and selling on domestic or international markets) of goods and services",
      hyper="activity", domains="commerce"),
    d("tax", "n", "tax|taxation|revenue_enhancement",
      "charge against a citizen's person or property or activity for the support of government",
      hyper="money", domains="economy law"),
    d("law", "n", "law|jurisprudence",
      "the collection of rules imposed by authority",
      ["civilization presupposes respect for the law"], hyper="cognition", domains="law"),
    d("history", "n", "history",
      "the discipline that records and interprets past events involving human beings",
      hyper="field_study", domains="history"),
    d("science", "n", "science|scientific_discipline",
      "a particular branch of scientific knowledge", ["the science of genetics"],
      hyper="field_study"),
    d("art", "n", "art|fine_art",
      "the products of human creativity; works of art collectively", hyper="artifact",
      domains="art"),
    d("idea", "n", "idea|thought",
      "the content of cognition; the main thing you are thinking about",
      ["it was not a good idea"], hyper="cognition"),
    d("plan", "n", "plan|program|programme",
      "a series of steps to be carried out or goals to be accomplished",
      ["they drew up a six-step plan"], hyper="idea"),
    d("problem", "n", "problem|trouble",
      "a source of difficulty", ["one trouble after another delayed the job"],
      hyper="state"),
    d("reason", "n", "reason|ground",
      "a rational motive for a belief or action", ["the reason that war was declared"],
      hyper="cognition"),
    d("result", "n", "result|resultant|final_result|outcome|termination",
      "something that results", ["he listened for the results on the radio"],
      hyper="event"),
    d("peace", "n", "peace",
      "the state prevailing during the absence of war", hyper="state", domains="politics"),
    d("danger", "n", "danger",
      "the condition of being susceptible to harm or injury", ["you are in no danger"],
      hyper="condition"),
    d("direction.way", "n", "direction|way",
      "a line leading to a place or point",
      ["he looked the other direction", "didn't know the way home"],
      hyper="location"),
    d("management", "n", "management|direction",
      "those in charge of running a business", hyper="organization", domains="economy"),

    # ------------------------------------------------------------- verbs
    d("make_v", "v", "make|create",
      "make or cause to be or to become", ["make a mess in one's office"]),
    d("go_v", "v", "go|travel|move|locomote",
      "change location; move, travel, or proceed",
      ["How fast does your new car go?"]),
    d("walk_v", "v", "walk",
      "use one's feet to advance; advance by steps", ["walk, don't run!"], hyper="go_v"),
    d("run_v", "v", "run",
      "move fast by using one's feet, with one foot off the ground at any given time",
      ["don't run--you'll be out of breath"], hyper="go_v"),
    d("ride_v", "v", "ride",
      "be carried or travel on or in a vehicle", ["she rides the subway to work"],
      hyper="go_v"),
    d("come_v", "v", "come|come_up",
      "move toward, travel toward something or somebody", hyper="go_v"),
    d("leave_v", "v", "leave|go_forth|go_away",
      "go away from a place", ["the teacher left the room"]),
    d("buy_v", "v", "buy|purchase",
      "obtain by purchase; acquire by means of a financial transaction",
      ["The family purchased a new car"], entails=["pay_v"]),
    d("pay_v", "v", "pay",
      "give money, usually in exchange for goods or services",
      ["I paid four dollars for this sandwich"]),
    d("sell_v", "v", "sell",
      "exchange or deliver for money or its equivalent", ["he sold his house in January"]),
    d("snore_v", "v", "snore|saw_wood|saw_logs",
      "breathe noisily during one's sleep", ["she complained that her husband snores"],
      entails=["sleep_v"]),
    d("sleep_v", "v", "sleep|kip|slumber",
      "be asleep"),
    d("eat_v", "v", "eat",
      "take in solid food", ["She was eating a banana"]),
    d("drink_v", "v", "drink|imbibe",
      "take in liquids", ["the patient must drink several liters each day"],
      entails=["swallow_v"]),
    d("swallow_v", "v", "swallow|get_down",
      "pass through the esophagus as part of eating or drinking"),
    d("win_v", "v", "win",
      "be the winner in a contest or competition; be victorious",
      ["he won the Gold Medal"], entails=["compete_v"]),
    d("lose_v", "v", "lose",
      "fail to win", ["we lost the battle but we won the war"], entails=["compete_v"]),
    d("compete_v", "v", "compete|vie|contend",
      "compete for something; engage in a contest"),
    d("build_v", "v", "build|construct",
      "make by combining materials and parts", ["the company is building a factory"],
      hyper="make_v"),
    d("contain_v", "v", "contain|bear|carry|hold",
      "contain or hold; have within", ["the jar carries wine"]),
    d("shelter_v", "v", "shelter",
      "provide shelter for", ["after the earthquake, the government sheltered the homeless"]),
    d("house.contain", "v", "house",
      "contain or cover", ["this box houses the gears"], hyper="contain_v"),
    d("house.lodge", "v", "house|put_up|domiciliate",
      "provide housing for", ["the immigrants were housed in a new development"],
      hyper="shelter_v"),
    d("speak_v", "v", "speak|talk",
      "exchange thoughts; talk with", ["they speak a lot of Spanish together"]),
    d("say_v", "v", "say|state|tell",
      "express in words", ["state your opinion"]),
    d("write_v", "v", "write|compose|pen|indite",
      "produce a literary work", ["she composed a poem"]),
    d("read_v", "v", "read",
      "interpret something that is written or printed", ["read the advertisement"]),
    d("see_v", "v", "see",
      "perceive by sight", ["you have to be a good observer to see all the details"]),
    d("teach_v", "v", "teach|learn|instruct",
      "impart skills or knowledge to", ["I taught them French"]),
    d("study_v", "v", "study|analyze|analyse|examine",
      "consider in detail and subject to an analysis in order to discover essential features",
      ["analyze a sonnet by Shakespeare"]),
    d("choose_v", "v", "choose|take|select|pick_out",
      "pick out, select, or choose from a number of alternatives",
      ["Take any one of these cards"]),
    d("elect_v", "v", "elect",
      "select by a vote for an office or membership",
      ["We elected him chairman of the board"], hyper="choose_v"),
    d("vote_v", "v", "vote",
      "express one's preference for a candidate or for a measure or resolution",
      ["He voted for the motion"], hyper="choose_v"),
    d("defend_v", "v", "defend",
      "be on the defensive; act against an attack", antonym=["attack_v"]),
    d("attack_v", "v", "attack|assail",
      "launch an attack or assault on", ["the army attacked the village"]),
    d("fight_v", "v", "fight|struggle",
      "be engaged in a fight; carry on a fight", ["the tribesmen fought each other"]),
    d("grow_v", "v", "grow",
      "become larger, greater, or bigger; expand or gain", ["the business grew fast"]),
    d("fall_v", "v", "fall",
      "descend in free fall under the influence of gravity",
      ["the branch fell from the tree"]),
    d("begin_v", "v", "begin|start|commence",
      "take the first step or steps in carrying out an action",
      ["we began working at dawn"]),
    d("end_v", "v", "end|stop|finish|terminate|cease",
      "bring to an end or halt", ["the attack ended the relative peace of the era"]),
    d("find_v", "v", "find|discover",
      "make a discovery", ["she discovered an archeological site"]),
    d("divide_v", "v", "divide|split|separate",
      "separate into parts or portions", ["divide the cake into three equal parts"]),
    d("give_v", "v", "give",
      "transfer possession of something concrete or abstract to somebody",
      ["I gave her my money"]),
    d("take_v", "v", "take",
      "get into one's hands, take physically", ["take a cookie!"]),
    d("keep_v", "v", "keep|maintain",
      "keep in a certain state, position, or activity", ["keep clean"]),

    # ------------------------------------------------------------- adjectives
    d("wet_a", "a", "wet",
      "covered or soaked with a liquid such as water", ["a wet bathing suit"],
      antonym=["dry_a"]),
    d("damp_s", "a", "damp|dampish|moist",
      "slightly wet", ["clothes damp with perspiration"], similar=["wet_a"],
      satellite=True),
    d("dry_a", "a", "dry",
      "free from liquid or moisture; lacking natural or normal moisture", ["dry land"]),
    d("arid_s", "a", "arid|waterless",
      "lacking sufficient water or rainfall", ["an arid climate"], similar=["dry_a"],
      satellite=True),
    d("big_a", "a", "big|large",
      "above average in size or number or quantity or magnitude or extent",
      ["a large city", "a big (or large) barn"], antonym=["small_a"]),
    d("huge_s", "a", "huge|immense|vast|enormous",
      "unusually great in size or amount or degree", ["huge government spending"],
      similar=["big_a"], satellite=True),
    d("small_a", "a", "small|little",
      "limited or below average in number or quantity or magnitude or extent",
      ["a little dining room"]),
    d("tiny_s", "a", "tiny|bantam|diminutive",
      "very small", ["a tiny hummingbird"], similar=["small_a"], satellite=True),
    d("old_a", "a", "old",
      "of long duration; not new", ["old tradition"], antonym=["new_a"]),
    d("ancient_s", "a", "ancient",
      "very old", ["an ancient mariner"], similar=["old_a"], satellite=True),
    d("new_a", "a", "new",
      "not of long duration; having just (or relatively recently) come into being",
      ["a new law"]),
    d("happy_a", "a", "happy",
      "enjoying or showing or marked by joy or pleasure", ["a happy smile"],
      antonym=["unhappy_a"]),
    d("glad_s", "a", "glad",
      "showing or causing joy and pleasure", similar=["happy_a"], satellite=True),
    d("unhappy_a", "a", "unhappy",
      "experiencing or marked by or causing sadness or sorrow",
      ["unhappy over her departure"]),
    d("fast_a", "a", "fast",
      "acting or moving or capable of acting or moving quickly", ["a fast car"],
      antonym=["slow_a"]),
    d("quick_s", "a", "quick|speedy",
      "accomplished rapidly and without delay", ["a quick inspection"],
      similar=["fast_a"], satellite=True),
    d("slow_a", "a", "slow",
      "not moving quickly", ["a slow walker"]),
    d("legislative_a", "a", "legislative",
      "relating to a legislature or composed of members of a legislature",
      ["legislative council"]),
    d("afraid_a", "a", "afraid(p)",
      "filled with fear or apprehension", ["afraid of snakes"]),
    d("good_a", "a", "good",
      "having desirable or positive qualities especially those suitable for a thing specified",
      ["good news"], antonym=["bad_a"]),
    d("bad_a", "a", "bad",
      "having undesirable or negative qualities", ["a bad report card"]),

    # ------------------------------------------------------------- adverbs
    d("quickly_r", "r", "quickly|rapidly|speedily|apace",
      "with rapid movements", ["he works quickly"]),
    d("slowly_r", "r", "slowly|easy|tardily|slow",
      "without speed", ["he spoke slowly"]),
    d("often_r", "r", "frequently|often|oftentimes|oft",
      "many times at short intervals", ["we often met over a cup of coffee"]),
    d("early_r", "r", "early|ahead_of_time|too_soon",
      "before the usual time or the time expected", ["she graduated early"]),
    d("late_r", "r", "late",
      "later than usual or than expected", ["the train arrived late"]),
    d("well_r", "r", "well|good",
      "in a good or proper or satisfactory manner", ["the children behaved well"]),
]

EXCEPTIONS = {
    "noun": [
        ("children", "child"),
        ("men", "man"),
        ("women", "woman"),
    ],
    "verb": [
        ("ate", "eat"), ("began", "begin"), ("begun", "begin"), ("bought", "buy"),
        ("built", "build"), ("came", "come"), ("chose", "choose"), ("chosen", "choose"),
        ("drank", "drink"), ("drunk", "drink"), ("eaten", "eat"), ("fell", "fall"),
        ("fallen", "fall"), ("fought", "fight"), ("found", "find"), ("gave", "give"),
        ("given", "give"), ("gone", "go"), ("grew", "grow"), ("grown", "grow"),
        ("held", "hold"), ("kept", "keep"), ("left", "leave"), ("lost", "lose"),
        ("made", "make"),
        ("paid", "pay"), ("ran", "run"), ("read", "read"), ("ridden", "ride"),
        ("rode", "ride"), ("said", "say"), ("saw", "see"), ("slept", "sleep"),
        ("sold", "sell"), ("spoke", "speak"), ("spoken", "speak"), ("taken", "take"),
        ("taught", "teach"), ("took", "take"), ("went", "go"), ("won", "win"),
        ("wrote", "write"), ("written", "write"),
    ],
    "adj": [
        ("better", "good"), ("best", "good"), ("worse", "bad"), ("worst", "bad"),
        ("bigger", "big"), ("biggest", "big"),
    ],
    "adv": [
        ("best", "well"), ("better", "well"),
    ],
}

POS_SUFFIX = {"n": "noun", "v": "verb", "a": "adj", "r": "adv"}
LEX_FILENUM = {"n": 6, "v": 35, "a": 0, "r": 2}

HEADER = (
    "  1 Mini English lexical database in the WordNet 3.0 dictionary format.\n"
    "  2 Generated by tools/make_mini_wordnet.py; regenerate instead of editing.\n"
)

# symbol emitted on the declaring synset, and its inverse on the target
FORWARD = {"hyper": "@", "part_mer": "%p", "member_mer": "%m",
           "antonym": "!", "entails": "*", "similar": "&"}
INVERSE = {"@": "~", "%p": "#p", "%m": "#m", "!": "!", "&": "&"}


def build():
    by_key = {s["key"]: s for s in SYNSETS}
    if len(by_key) != len(SYNSETS):
        raise SystemExit("duplicate synset keys")

    # expand pointers with automatic inverses
    pointers = defaultdict(list)  # key -> [(symbol, target_key, lexical)]
    for s in SYNSETS:
        for attr, symbol in FORWARD.items():
            for target in s[attr]:
                if target not in by_key:
                    raise SystemExit(f"{s['key']}: unknown relation target {target!r}")
                lexical = symbol == "!"
                pointers[s["key"]].append((symbol, target, lexical))
                if symbol in INVERSE:
                    inv = (INVERSE[symbol], s["key"], lexical)
                    if inv not in pointers[target]:
                        pointers[target].append(inv)

    # group by data file, keep declaration order
    by_file = defaultdict(list)
    for s in SYNSETS:
        by_file[s["pos"]].append(s)

    # first pass: line bodies with dummy offsets to measure lengths
    def render(s, offsets):
        ss_type = "s" if s["satellite"] else s["pos"]
        fields = [f"{offsets[s['key']]:08d}", f"{LEX_FILENUM[s['pos']]:02d}", ss_type,
                  f"{len(s['words']):02x}"]
        for w in s["words"]:
            fields += [w, "0"]
        ptrs = pointers[s["key"]]
        fields.append(f"{len(ptrs):03d}")
        for symbol, target, lexical in ptrs:
            tgt = by_key[target]
            fields += [symbol, f"{offsets[target]:08d}", tgt["pos"],
                       "0101" if lexical else "0000"]
        if s["pos"] == "v":
            fields += ["01", "+", "02", "00"]
        gloss = s["gloss"]
        for ex in s["ex"]:
            gloss += f'; "{ex}"'
        return " ".join(fields) + " | " + gloss + "  \n"

    dummy = {s["key"]: 0 for s in SYNSETS}
    offsets = {}
    for pos, members in by_file.items():
        at = len(HEADER.encode())
        for s in members:
            offsets[s["key"]] = at
            at += len(render(s, dummy).encode())

    OUT_DIR.mkdir(parents=True, exist_ok=True)
    for pos, members in by_file.items():
        path = OUT_DIR / f"data.{POS_SUFFIX[pos]}"
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(HEADER)
            for s in members:
                line = render(s, offsets)
                expected = offsets[s["key"]]
                if fh.tell() != expected:
                    raise SystemExit(f"offset drift at {s['key']}: {fh.tell()} != {expected}")
                fh.write(line)

    # index files: lemma -> offsets in declaration order
    for pos, members in by_file.items():
        entries = defaultdict(list)  # lemma -> [(offset, symbols)]
        symbols_of = defaultdict(set)
        for s in members:
            for w in s["words"]:
                lemma = _MARKER.sub("", w).lower()
                entries[lemma].append(offsets[s["key"]])
                symbols_of[lemma].update(sym for sym, _, _ in pointers[s["key"]])
        path = OUT_DIR / f"index.{POS_SUFFIX[pos]}"
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(HEADER)
            for lemma in sorted(entries):
                offs = entries[lemma]
                syms = sorted(symbols_of[lemma])
                fields = [lemma, pos, str(len(offs)), str(len(syms)), *syms,
                          str(len(offs)), "1", *[f"{o:08d}" for o in offs]]
                fh.write(" ".join(fields) + "  \n")

    for suffix, rows in EXCEPTIONS.items():
        with open(OUT_DIR / f"{suffix}.exc", "w", encoding="utf-8") as fh:
            for inflected, base in sorted(rows):
                fh.write(f"{inflected} {base}\n")

    # WordNet Domains mapping keyed by offset-pos
    with open(OUT_DIR.parent / "wordnet_domains.txt", "w", encoding="utf-8") as fh:
        for s in SYNSETS:
            if s["domains"]:
                pos = s["pos"]  # satellites map with their data file pos
                fh.write(f"{offsets[s['key']]:08d}-{pos}\t{s['domains']}\n")

    counts = {pos: len(members) for pos, members in by_file.items()}
    print(f"wrote {sum(counts.values())} synsets to {OUT_DIR}: {counts}")


if __name__ == "__main__":
    build()
