// Copyright (c) 2026 the pshrink authors
// SPDX-License-Identifier: Apache-2.0
//
// Built-in copy of data/lexicon.tsv so the library works with no
// data files on disk. Keep the two in sync (the test suite checks).
#pragma once

#include <string_view>

namespace pshrink {

inline constexpr const char* kLexiconVersion = "1";

inline constexpr std::string_view kBuiltinLexicon = R"LEX(# pshrink lexicon, format v1
# word<TAB>pos entries, then trigger<TAB>relation entries
[words]
a	determiner
abilities	noun
ability	noun
able	adjective
abnormal	adjective
abolish	verb
abolished	verb
abolishes	verb
abolishing	verb
about	preposition
above	preposition
abrasive	adjective
abroad	adverb
absolutely	adverb
absurdly	adverb
academic	adjective
academies	noun
academy	noun
accelerate	verb
accelerated	verb
accelerates	verb
accelerating	verb
acceleration	noun
accelerations	noun
accept	verb
accepted	verb
accepting	verb
accepts	verb
accident	noun
accidentally	adverb
accidents	noun
accomplish	verb
accomplished	verb
accomplishes	verb
accomplishing	verb
accomplishment	noun
accomplishments	noun
accordingly	adverb
account	noun
accounts	noun
accuracies	noun
accuracy	noun
accurate	adjective
accurately	adverb
accuse	verb
accused	verb
accuses	verb
accusing	verb
ache	noun
aches	noun
achieve	verb
achieved	verb
achievement	noun
achievements	noun
achieves	verb
achieving	verb
acid	noun
acids	noun
acknowledge	verb
acknowledged	verb
acknowledges	verb
acknowledging	verb
acoustic	adjective
acquire	verb
acquired	verb
acquires	verb
acquiring	verb
acquit	verb
acquited	verb
acquiting	verb
acquits	verb
acre	noun
acres	noun
across	preposition
active	adjective
actively	adverb
actor	noun
actors	noun
actress	noun
actresses	noun
actually	adverb
acute	adjective
acutely	adverb
adapt	verb
adaptation	noun
adaptations	noun
adapted	verb
adapting	verb
adapts	verb
add	verb
added	verb
adding	verb
additionally	adverb
address	noun
adds	verb
adequate	adjective
adhesive	adjective
adjust	verb
adjustable	adjective
adjusted	verb
adjusting	verb
adjustment	noun
adjustments	noun
adjusts	verb
administer	verb
administered	verb
administering	verb
administers	verb
admit	verb
admits	verb
admitted	verb
admitting	verb
adopt	verb
adopted	verb
adopting	verb
adopts	verb
adult	noun
adults	noun
advanced	adjective
adventure	noun
adventures	noun
advertisement	noun
advertisements	noun
advise	verb
advised	verb
advises	verb
advising	verb
advocate	verb
advocated	verb
advocates	verb
advocating	verb
aerial	adjective
after	preposition
afternoon	noun
afternoons	noun
again	adverb
against	preposition
age	noun
agencies	noun
agency	noun
agent	noun
agents	noun
ages	noun
agile	adjective
agitated	adjective
agree	verb
agreeed	verb
agreeing	verb
agreement	noun
agreements	noun
agrees	verb
ahead	adverb
aid	noun
aids	noun
aim	noun
aims	noun
airport	noun
airports	noun
alarm	noun
alarms	noun
albeit	conjunction
alert	adjective
algae	noun
algaes	noun
algorithm	noun
algorithms	noun
alien	adjective
alight	verb
alighted	verb
alighting	verb
alights	verb
align	verb
aligned	verb
aligning	verb
aligns	verb
alive	adjective
all	determiner
allegedly	adverb
almost	adverb
along	preposition
alpine	adjective
already	adverb
also	adverb
alter	verb
altered	verb
altering	verb
alternative	noun
alters	verb
although	conjunction
always	adverb
am	verb
amateur	adjective
amaze	verb
amazed	verb
amazes	verb
amazing	verb
ambiguous	adjective
ambulance	noun
ambulances	noun
amend	verb
amended	verb
amending	verb
amends	verb
amid	preposition
among	preposition
amount	noun
amounts	noun
amphibious	adjective
amplified	verb
amplifies	verb
amplify	verb
amplifying	verb
amplitude	noun
amplitudes	noun
amputate	verb
amputated	verb
amputates	verb
amputating	verb
amuse	verb
amused	verb
amuses	verb
amusing	verb
an	determiner
analog	adjective
analysis	noun
analyze	verb
analyzed	verb
analyzes	verb
analyzing	verb
ancient	adjective
and	conjunction
anger	verb
angered	verb
angering	verb
angers	verb
angle	noun
angles	noun
angrily	adverb
ankle	noun
ankles	noun
anniversaries	noun
anniversary	noun
announce	verb
announced	verb
announcement	noun
announcements	noun
announces	verb
announcing	verb
annoy	verb
annoyed	verb
annoying	verb
annoys	verb
annually	adverb
anomaly	noun
anonymities	noun
anonymity	noun
another	determiner
answer	noun
answers	noun
ant	noun
antenna	noun
antennas	noun
anticipate	verb
anticipated	verb
anticipates	verb
anticipating	verb
antique	adjective
ants	noun
anxious	adjective
anxiously	adverb
any	determiner
anybody	pronoun
anyone	pronoun
anything	pronoun
anywhere	adverb
apart	adverb
apartment	noun
apartments	noun
apathetic	adjective
ape	noun
apes	noun
apex	noun
apexes	noun
apologize	verb
apologized	verb
apologizes	verb
apologizing	verb
apparent	adjective
apparently	adverb
appear	verb
appeared	verb
appearing	verb
appears	verb
appendix	noun
appendixes	noun
apple	noun
apples	noun
application	noun
applications	noun
applied	verb
applies	verb
apply	verb
applying	verb
appoint	verb
appointed	verb
appointing	verb
appoints	verb
appropriate	adjective
approximate	adjective
aquarium	noun
aquariums	noun
aquatic	adjective
arch	noun
arches	noun
architect	noun
architects	noun
archive	noun
archives	noun
ardent	adjective
are	verb
area	noun
areas	noun
arena	noun
arenas	noun
argue	verb
argued	verb
argues	verb
arguing	verb
arid	adjective
arm	noun
armies	noun
armor	noun
armories	noun
armors	noun
armory	noun
arms	noun
army	noun
aroma	noun
aromas	noun
around	preposition
arrange	verb
arranged	verb
arranges	verb
arranging	verb
arrest	verb
arrested	verb
arresting	verb
arrests	verb
arrive	verb
arrived	verb
arrives	verb
arriving	verb
arrogant	adjective
arrow	noun
arrows	noun
arsenal	noun
arsenals	noun
art	noun
article	noun
articles	noun
artificial	adjective
artist	noun
artistic	adjective
artists	noun
arts	noun
as	preposition
ash	noun
ashes	noun
aside	adverb
ask	verb
asked	verb
asking	verb
asks	verb
asleep	adjective
assemble	verb
assembled	verb
assembles	verb
assembling	verb
assembly	noun
assert	verb
asserted	verb
asserting	verb
asserts	verb
assess	verb
assessed	verb
assesses	verb
assessing	verb
assist	verb
assistance	noun
assistances	noun
assistant	noun
assistants	noun
assisted	verb
assisting	verb
assists	verb
assortment	noun
assortments	noun
assume	verb
assumed	verb
assumes	verb
assuming	verb
assure	verb
assured	verb
assures	verb
assuring	verb
asteroid	noun
asteroids	noun
astonish	verb
astonished	verb
astonishes	verb
astonishing	verb
at	preposition
ate	verb
athletic	adjective
atlas	noun
atlases	noun
atom	noun
atomic	adjective
atoms	noun
attach	verb
attached	verb
attaches	verb
attaching	verb
attack	noun
attacks	noun
attempt	noun
attempts	noun
attic	noun
attics	noun
attitude	noun
attitudes	noun
attribute	noun
attributes	noun
atypical	adjective
auction	noun
auctions	noun
audience	noun
audiences	noun
audit	noun
audits	noun
aunt	noun
aunts	noun
authentic	adjective
author	noun
authors	noun
automated	adjective
automatic	adjective
autonomous	adjective
autumn	noun
autumns	noun
availabilities	noun
availability	noun
available	adjective
avenue	noun
avenues	noun
average	noun
averages	noun
awake	adjective
award	noun
awards	noun
away	adverb
awkward	adjective
axe	noun
axes	noun
axis	noun
axises	noun
babies	noun
baby	noun
back	adverb
backdrop	noun
backdrops	noun
background	noun
backgrounds	noun
backs	noun
backup	noun
backups	noun
bacteria	noun
bacterias	noun
bad	adjective
badge	noun
badges	noun
badly	adverb
bag	noun
bags	noun
bake	verb
baked	verb
bakes	verb
baking	verb
balance	noun
balances	noun
bald	adjective
ballet	noun
ballets	noun
balmy	adjective
bamboozle	verb
bamboozled	verb
bamboozles	verb
bamboozling	verb
ban	noun
banana	noun
bananas	noun
band	noun
bandage	noun
bandages	noun
bands	noun
bandwidth	noun
bandwidths	noun
bank	noun
bankroll	verb
bankrolled	verb
bankrolling	verb
bankrolls	verb
bankrupt	verb
bankrupted	verb
bankrupting	verb
bankrupts	verb
banks	noun
bans	noun
barbaric	adjective
barely	adverb
bargain	verb
bargained	verb
bargaining	verb
bargains	verb
barn	noun
barns	noun
barometer	noun
barometers	noun
barracks	noun
barrackses	noun
barrel	noun
barrels	noun
barren	adjective
barricade	noun
barricades	noun
baseline	noun
baselines	noun
basement	noun
basements	noun
basic	adjective
basis	noun
basket	noun
baskets	noun
bat	noun
batch	noun
batches	noun
bathroom	noun
bathrooms	noun
bats	noun
batteries	noun
battery	noun
battle	noun
battles	noun
bay	noun
bays	noun
be	verb
beach	noun
beaches	noun
beam	noun
beams	noun
bean	noun
beans	noun
bear	noun
beard	noun
beards	noun
bearing	verb
bears	noun
beat	verb
beating	verb
beats	verb
beaver	noun
beavers	noun
became	verb
because	conjunction
become	verb
becomes	verb
becoming	verb
bed	noun
bedroom	noun
bedrooms	noun
beds	noun
bee	noun
been	verb
beer	noun
beers	noun
bees	noun
beetle	noun
beetles	noun
before	preposition
beg	verb
began	verb
begged	verb
begging	verb
begin	verb
beginning	noun
begins	verb
begs	verb
begun	verb
behind	preposition
being	verb
belief	noun
beliefs	noun
believe	verb
believed	verb
believes	verb
believing	verb
bell	noun
bells	noun
belly	noun
below	preposition
belt	noun
belts	noun
bench	noun
benches	noun
benchmark	noun
benchmarks	noun
bend	verb
bending	verb
bends	verb
beneath	preposition
benign	adjective
bent	verb
bequeath	verb
bequeathed	verb
bequeathing	verb
bequeaths	verb
berries	noun
berry	noun
beseech	verb
beseeched	verb
beseeches	verb
beseeching	verb
beside	preposition
besides	preposition
best	adjective
bestow	verb
bestowed	verb
bestowing	verb
bestows	verb
betray	verb
betrayed	verb
betraying	verb
betrays	verb
better	adjective
between	preposition
beyond	preposition
bicycle	noun
bicycles	noun
bidder	noun
bidders	noun
big	adjective
bigger	adjective
biggest	adjective
bill	noun
billion	numeral
bills	noun
bind	verb
binded	verb
binding	verb
binds	verb
bird	noun
birds	noun
birth	noun
birthday	noun
birthdays	noun
births	noun
bit	verb
bite	verb
bites	verb
biting	verb
bitten	verb
bitter	adjective
bivouac	verb
bivouaced	verb
bivouacing	verb
bivouacs	verb
bizarre	adjective
bizarrely	adverb
blackmail	verb
blackmailed	verb
blackmailing	verb
blackmails	verb
blade	noun
blades	noun
blame	verb
blamed	verb
blames	verb
blaming	verb
bland	adjective
blanket	noun
blankets	noun
blazing	adjective
blend	verb
blended	verb
blending	verb
blends	verb
bless	verb
blessed	verb
blesses	verb
blessing	verb
blew	verb
blind	adjective
blister	verb
blistered	verb
blistering	verb
blisters	verb
blood	noun
bloods	noun
blow	verb
blowing	verb
blown	verb
blows	verb
blueprint	noun
blueprints	noun
bluntly	adverb
board	noun
boards	noun
boat	noun
boats	noun
bodies	noun
body	noun
boil	verb
boiled	verb
boiling	verb
boils	verb
boldly	adverb
bolt	noun
bolts	noun
bomb	noun
bombs	noun
bond	noun
bonds	noun
bone	noun
bones	noun
bonus	noun
boom	noun
booms	noun
boot	noun
boots	noun
border	noun
borders	noun
bore	verb
borne	verb
both	determiner
bottle	noun
bottles	noun
bottom	noun
bottoms	noun
bought	verb
boundaries	noun
boundary	noun
bowl	noun
bowls	noun
box	noun
boxes	noun
boy	noun
boys	noun
brain	noun
brains	noun
brake	verb
braked	verb
brakes	verb
braking	verb
branch	noun
branches	noun
brand	noun
brands	noun
brave	adjective
bravely	adverb
bread	noun
breads	noun
break	verb
breakfast	noun
breakfasts	noun
breaking	verb
breaks	verb
breakthrough	noun
breakthroughs	noun
breed	noun
brew	verb
brewed	verb
brewing	verb
brews	verb
bribe	verb
bribed	verb
bribes	verb
bribing	verb
bridge	noun
bridges	noun
bridle	verb
bridled	verb
bridles	verb
bridling	verb
briefly	adverb
bright	adjective
brighten	verb
brightened	verb
brightening	verb
brightens	verb
brighter	adjective
brightest	adjective
brilliant	adjective
bring	verb
bringing	verb
brings	verb
brittle	adjective
broad	adjective
broadcast	verb
broadcasted	verb
broadcasting	verb
broadcasts	verb
broadly	adverb
broke	verb
broken	verb
brother	noun
brothers	noun
brought	verb
browse	verb
browsed	verb
browser	noun
browsers	noun
browses	verb
browsing	verb
bruise	verb
bruised	verb
bruises	verb
bruising	verb
brush	noun
brushes	noun
brutal	adjective
bubble	noun
bubbles	noun
bucket	noun
buckets	noun
budget	noun
budgets	noun
buff	verb
buffed	verb
buffing	verb
buffs	verb
build	verb
building	noun
buildings	noun
builds	verb
built	verb
bull	noun
bullet	noun
bullets	noun
bulls	noun
bully	noun
bunker	noun
bunkers	noun
burden	noun
burdens	noun
bureau	noun
bureaus	noun
burgle	verb
burgled	verb
burgles	verb
burgling	verb
buried	verb
buries	verb
burrow	noun
burrows	noun
burst	verb
bursting	verb
bursts	verb
bury	verb
burying	verb
bus	noun
buses	noun
bush	noun
bushes	noun
business	noun
busy	adjective
but	conjunction
butterfly	noun
button	noun
buttons	noun
buy	verb
buyer	noun
buyers	noun
buying	verb
buys	verb
by	preposition
cabinet	noun
cabinets	noun
cable	noun
cables	noun
cafe	noun
cafes	noun
cage	noun
cages	noun
cake	noun
cakes	noun
calculate	verb
calculated	verb
calculates	verb
calculating	verb
calendar	noun
calendars	noun
calf	noun
calibrate	verb
calibrated	verb
calibrates	verb
calibrating	verb
call	verb
called	verb
calling	verb
calls	verb
calm	verb
calmed	verb
calming	verb
calmly	adverb
calms	verb
calves	noun
came	verb
camel	noun
camels	noun
camera	noun
cameras	noun
campaign	noun
campaigns	noun
campus	noun
can	verb
canal	noun
canals	noun
candid	adjective
candidate	noun
candidly	adverb
candle	noun
candles	noun
cannon	noun
cannons	noun
canvas	noun
canvases	noun
canyon	noun
canyons	noun
cap	noun
capable	adjective
capacities	noun
capacity	noun
cape	noun
capes	noun
caps	noun
capture	verb
captured	verb
captures	verb
capturing	verb
car	noun
carbon	noun
carbons	noun
cardboard	noun
cardboards	noun
career	noun
careers	noun
carefully	adverb
carelessly	adverb
carpet	noun
carpets	noun
carried	verb
carrier	noun
carriers	noun
carries	verb
carrot	noun
carrots	noun
carry	verb
carrying	verb
cars	noun
carve	verb
carved	verb
carves	verb
carving	verb
cash	noun
cashes	noun
cast	verb
casting	verb
castle	noun
castles	noun
casts	verb
casual	adjective
cat	noun
catalyst	noun
catalysts	noun
catch	verb
catches	verb
catching	verb
categories	noun
categorize	verb
categorized	verb
categorizes	verb
categorizing	verb
category	noun
cats	noun
caught	verb
cause	noun
causes	noun
cave	noun
caves	noun
cease	verb
ceased	verb
ceases	verb
ceasing	verb
ceiling	noun
ceilings	noun
celebration	noun
celebrations	noun
celestial	adjective
cell	noun
cells	noun
cellular	adjective
census	noun
center	noun
centers	noun
central	adjective
centuries	noun
century	noun
ceremonies	noun
ceremony	noun
certain	adjective
certainly	adverb
certificate	noun
chain	noun
chains	noun
chair	noun
chairman	noun
chairmans	noun
chairs	noun
chalk	noun
chalks	noun
challenge	noun
challenges	noun
champion	noun
champions	noun
chance	noun
chances	noun
change	noun
changes	noun
chaos	noun
chapter	noun
chapters	noun
char	verb
chared	verb
charing	verb
charities	noun
charity	noun
chars	verb
chart	noun
charts	noun
chase	verb
chased	verb
chases	verb
chasing	verb
cheap	adjective
cheaper	adjective
cheapest	adjective
cheat	verb
cheated	verb
cheating	verb
cheats	verb
checkpoint	noun
checkpoints	noun
cheerful	adjective
cheetah	noun
cheetahs	noun
chemical	noun
chemicals	noun
chest	noun
chests	noun
chew	verb
chewed	verb
chewing	verb
chews	verb
chicken	noun
chickens	noun
chief	adjective
chiefly	adverb
child	noun
children	noun
chilly	adjective
chimpanzee	noun
chimpanzees	noun
chipset	noun
chipsets	noun
chocolate	noun
choice	noun
choices	noun
choke	verb
choked	verb
chokes	verb
choking	verb
choose	verb
chooses	verb
choosing	verb
chop	verb
choped	verb
choping	verb
chops	verb
chorus	noun
choruses	noun
chose	verb
chosen	verb
chronic	adjective
chronically	adverb
church	noun
churches	noun
cinema	noun
cinemas	noun
circle	noun
circles	noun
circuit	noun
circuits	noun
cities	noun
citizen	noun
citizens	noun
city	noun
civic	adjective
civil	adjective
civilized	adjective
claim	verb
claimed	verb
claiming	verb
claims	verb
clan	noun
clans	noun
clarified	verb
clarifies	verb
clarify	verb
clarifying	verb
clarities	noun
clarity	noun
class	noun
classified	verb
classifies	verb
classify	verb
classifying	verb
clause	noun
clauses	noun
clean	verb
cleaned	verb
cleaner	adjective
cleanest	adjective
cleaning	verb
cleans	verb
clear	adjective
clearly	adverb
clerk	noun
clerks	noun
clever	adjective
client	noun
clients	noun
cliff	noun
cliffs	noun
climate	noun
climb	verb
climbed	verb
climbing	verb
climbs	verb
cling	verb
clinging	verb
clings	verb
clinic	noun
clinics	noun
clip	verb
cliped	verb
cliping	verb
clips	verb
clock	noun
clocks	noun
close	verb
closed	verb
closely	adverb
closer	adjective
closes	verb
closest	adjective
closet	noun
closets	noun
closing	verb
cloth	noun
clothes	noun
clotheses	noun
clothing	noun
cloths	noun
cloud	noun
clouds	noun
cloudy	adjective
club	noun
clubs	noun
clumsy	adjective
clung	verb
cluster	noun
clusters	noun
coach	noun
coaches	noun
coal	noun
coals	noun
coarse	adjective
coast	noun
coastal	adjective
coasts	noun
coat	noun
coats	noun
code	noun
codes	noun
coefficient	noun
coefficients	noun
coffee	noun
coffees	noun
coil	verb
coiled	verb
coiling	verb
coils	verb
coin	noun
coincidentally	adverb
coins	noun
cold	adjective
colder	adjective
coldest	adjective
coldly	adverb
collapse	verb
collapsed	verb
collapses	verb
collapsing	verb
colleague	noun
colleagues	noun
collect	verb
collected	verb
collecting	verb
collection	noun
collections	noun
collects	verb
college	noun
colleges	noun
colonies	noun
colony	noun
column	noun
columns	noun
comb	noun
combine	verb
combined	verb
combines	verb
combining	verb
combs	noun
combustible	adjective
come	verb
comes	verb
comet	noun
comets	noun
comfort	verb
comforted	verb
comforting	verb
comforts	verb
coming	verb
commence	verb
commenced	verb
commences	verb
commencing	verb
comment	noun
commission	noun
commissions	noun
committee	noun
committees	noun
common	adjective
commonly	adverb
communities	noun
community	noun
commute	verb
commuted	verb
commutes	verb
commuting	verb
comparatively	adverb
compare	verb
compared	verb
compares	verb
comparing	verb
compass	noun
compasses	noun
compatibilities	noun
compatibility	noun
compensate	verb
compensated	verb
compensates	verb
compensating	verb
competent	adjective
competition	noun
competitions	noun
compile	verb
compiled	verb
compiles	verb
compiling	verb
complete	verb
completed	verb
completely	adverb
completes	verb
completing	verb
complexities	noun
complexity	noun
complicated	adjective
component	noun
components	noun
compound	noun
compounds	noun
comprehend	verb
comprehended	verb
comprehending	verb
comprehends	verb
compromise	verb
compromised	verb
compromises	verb
compromising	verb
computer	noun
computers	noun
conceal	verb
concealed	verb
concealing	verb
conceals	verb
concede	verb
conceded	verb
concedes	verb
conceding	verb
conceited	adjective
concept	noun
concepts	noun
concerned	adjective
concert	noun
concerts	noun
conclusion	noun
conclusions	noun
condition	noun
conditions	noun
cone	noun
cones	noun
conference	noun
conferences	noun
confident	adjective
confirm	verb
confirmed	verb
confirming	verb
confirms	verb
confiscate	verb
confiscated	verb
confiscates	verb
confiscating	verb
conflict	noun
conflicts	noun
confront	verb
confronted	verb
confronting	verb
confronts	verb
confuse	verb
confused	verb
confuses	verb
confusing	verb
congratulate	verb
congratulated	verb
congratulates	verb
congratulating	verb
congress	noun
congresses	noun
connect	verb
connected	verb
connecting	verb
connects	verb
conquer	verb
conquered	verb
conquering	verb
conquers	verb
consequence	noun
consequences	noun
consequently	adverb
conservative	adjective
console	verb
consoled	verb
consoles	verb
consoling	verb
constant	noun
constantly	adverb
constants	noun
construct	verb
constructed	verb
constructing	verb
constructs	verb
consulate	noun
consulates	noun
consult	verb
consulted	verb
consulting	verb
consults	verb
consumer	noun
consumers	noun
container	noun
containers	noun
contaminate	verb
contaminated	verb
contaminates	verb
contaminating	verb
contemporary	adjective
context	noun
contexts	noun
continually	adverb
continue	verb
continued	verb
continues	verb
continuing	verb
continuously	adverb
contract	noun
contracts	noun
contribute	verb
contributed	verb
contributes	verb
contributing	verb
control	verb
controled	verb
controling	verb
controls	verb
conventional	adjective
conversation	noun
conversations	noun
convert	verb
converted	verb
convertible	adjective
converting	verb
converts	verb
convict	verb
convicted	verb
convicting	verb
convicts	verb
convince	verb
convinced	verb
convinces	verb
convincing	verb
cook	verb
cooked	verb
cookie	noun
cookies	noun
cooking	verb
cooks	verb
cool	adjective
cooler	adjective
coolest	adjective
coolly	adverb
coop	noun
coops	noun
cope	verb
coped	verb
copes	verb
copies	noun
coping	verb
copper	noun
coppers	noun
copy	noun
copyright	noun
copyrights	noun
coral	noun
corals	noun
cork	noun
corks	noun
corn	noun
corner	noun
corners	noun
corns	noun
corporate	adjective
correct	adjective
correctly	adverb
corrosive	adjective
cosmetic	noun
cosmetics	noun
cosmic	adjective
cost	noun
costing	verb
costly	adjective
costs	noun
cotton	noun
cottons	noun
couch	noun
couches	noun
could	verb
council	noun
councils	noun
counterfeit	adjective
countries	noun
country	noun
couple	noun
couples	noun
coupon	noun
coupons	noun
course	noun
courses	noun
court	noun
courteous	adjective
courts	noun
cousin	noun
cousins	noun
cover	verb
covered	verb
covering	verb
covers	verb
cow	noun
cowardly	adjective
cows	noun
crab	noun
crabs	noun
crater	noun
craters	noun
crawl	verb
crawled	verb
crawling	verb
crawls	verb
creamy	adjective
create	verb
created	verb
creates	verb
creating	verb
creative	adjective
credit	noun
credits	noun
creek	noun
creeks	noun
crime	noun
crimes	noun
crisis	noun
critical	adjective
criticize	verb
criticized	verb
criticizes	verb
criticizing	verb
crocodile	noun
crocodiles	noun
crop	noun
crops	noun
crossroad	noun
crossroads	noun
crow	noun
crowded	adjective
crows	noun
crucial	adjective
cruel	adjective
cruelly	adverb
cruise	verb
cruised	verb
cruises	verb
cruising	verb
crumble	verb
crumbled	verb
crumbles	verb
crumbling	verb
crush	verb
crushed	verb
crushes	verb
crushing	verb
crutch	noun
crutches	noun
crystal	noun
crystals	noun
cube	noun
cubes	noun
cuisine	noun
cuisines	noun
cultivate	verb
cultivated	verb
cultivates	verb
cultivating	verb
culturally	adverb
culture	noun
cultures	noun
cup	noun
cups	noun
cure	verb
cured	verb
cures	verb
curing	verb
curious	adjective
curl	verb
curled	verb
curling	verb
curls	verb
current	adjective
currently	adverb
curtain	noun
curtains	noun
curtsied	verb
curtsies	verb
curtsy	verb
curtsying	verb
curve	noun
curves	noun
custom	noun
customer	noun
customers	noun
customs	noun
cut	verb
cuts	verb
cutting	verb
cycle	noun
cycles	noun
cylinder	noun
cylinders	noun
dagger	noun
daggers	noun
daily	adjective
dam	noun
damage	verb
damaged	verb
damages	verb
damaging	verb
damp	adjective
dampen	verb
dampened	verb
dampening	verb
dampens	verb
dams	noun
dance	noun
dancer	noun
dancers	noun
dances	noun
danger	noun
dangerously	adverb
dangers	noun
dare	verb
dared	verb
dares	verb
daring	verb
dark	adjective
darken	verb
darkened	verb
darkening	verb
darkens	verb
darker	adjective
darkest	adjective
darling	noun
data	noun
database	noun
databases	noun
datas	noun
dataset	noun
datasets	noun
date	noun
dates	noun
datum	noun
daughter	noun
daughters	noun
dawn	noun
dawns	noun
dead	adjective
deadline	noun
deadlines	noun
deadly	adjective
deaf	adjective
deal	noun
dealing	verb
deals	noun
dealt	verb
death	noun
deaths	noun
debone	verb
deboned	verb
debones	verb
deboning	verb
debt	noun
debts	noun
decade	noun
decades	noun
decay	verb
decayed	verb
decaying	verb
decays	verb
deceive	verb
deceived	verb
deceives	verb
deceiving	verb
decelerate	verb
decelerated	verb
decelerates	verb
decelerating	verb
decide	verb
decided	verb
decides	verb
deciding	verb
decimal	noun
decimals	noun
declare	verb
declared	verb
declares	verb
declaring	verb
decline	noun
declines	noun
decorate	verb
decorated	verb
decorates	verb
decorating	verb
decrease	verb
decreased	verb
decreases	verb
decreasing	verb
dedicate	verb
dedicated	verb
dedicates	verb
dedicating	verb
deep	adjective
deeper	adjective
deepest	adjective
deeply	adverb
deer	noun
defeat	verb
defeated	verb
defeating	verb
defeats	verb
defend	verb
defended	verb
defending	verb
defends	verb
defense	noun
defenses	noun
defer	verb
defered	verb
defering	verb
defers	verb
defied	verb
defies	verb
define	verb
defined	verb
defines	verb
defining	verb
definitely	adverb
defraud	verb
defrauded	verb
defrauding	verb
defrauds	verb
defy	verb
defying	verb
degrade	verb
degraded	verb
degrades	verb
degrading	verb
degree	noun
degrees	noun
dehydrate	verb
dehydrated	verb
dehydrates	verb
dehydrating	verb
dejected	adjective
delay	verb
delayed	verb
delaying	verb
delays	verb
delegate	noun
delegation	noun
delegations	noun
delete	verb
deleted	verb
deletes	verb
deleting	verb
deliberately	adverb
delicate	adjective
delight	verb
delighted	verb
delighting	verb
delights	verb
deliver	verb
delivered	verb
delivering	verb
delivers	verb
democracies	noun
democracy	noun
demolish	verb
demolished	verb
demolishes	verb
demolishing	verb
demote	verb
demoted	verb
demotes	verb
demoting	verb
den	noun
denied	verb
denies	verb
dens	noun
dense	adjective
densities	noun
density	noun
dent	verb
dented	verb
denting	verb
dentist	noun
dentists	noun
dents	verb
deny	verb
denying	verb
depart	verb
departed	verb
departing	verb
department	noun
departments	noun
departs	verb
deposit	noun
deposits	noun
depot	noun
depots	noun
depressed	adjective
depression	noun
depressions	noun
depth	noun
depths	noun
describe	verb
described	verb
describes	verb
describing	verb
desert	noun
deserted	adjective
deserts	noun
designer	noun
designers	noun
desk	noun
desks	noun
desperate	adjective
despite	preposition
destination	noun
destinations	noun
destroy	verb
destroyed	verb
destroyer	noun
destroyers	noun
destroying	verb
destroys	verb
detach	verb
detached	verb
detaches	verb
detaching	verb
detailed	adjective
detain	verb
detained	verb
detaining	verb
detains	verb
detect	verb
detected	verb
detecting	verb
detective	noun
detects	verb
deteriorate	verb
deteriorated	verb
deteriorates	verb
deteriorating	verb
detour	noun
detours	noun
develop	verb
developed	verb
developing	verb
development	noun
developments	noun
develops	verb
device	noun
devices	noun
devote	verb
devoted	verb
devotes	verb
devoting	verb
diagnose	verb
diagnosed	verb
diagnoses	verb
diagnosing	verb
diagram	noun
diagrams	noun
dialogue	noun
dialogues	noun
diamond	noun
diamonds	noun
dice	verb
diced	verb
dices	verb
dicing	verb
did	verb
die	verb
died	verb
dies	verb
difference	noun
differences	noun
differentiate	verb
differentiated	verb
differentiates	verb
differentiating	verb
dig	verb
digging	verb
digit	noun
digital	adjective
digits	noun
digs	verb
diing	verb
dim	verb
dimed	verb
dimension	noun
dimensions	noun
diming	verb
diminish	verb
diminished	verb
diminishes	verb
diminishing	verb
dims	verb
dinner	noun
dinners	noun
dip	noun
diploma	noun
diplomas	noun
dips	noun
directly	adverb
director	noun
directors	noun
dirt	noun
dirtied	verb
dirties	verb
dirts	noun
dirty	verb
dirtying	verb
disappear	verb
disappeared	verb
disappearing	verb
disappears	verb
disappoint	verb
disappointed	verb
disappointing	verb
disappoints	verb
disarm	verb
disarmed	verb
disarming	verb
disarms	verb
disaster	noun
disasters	noun
disbelieve	verb
disbelieved	verb
disbelieves	verb
disbelieving	verb
discern	verb
discerned	verb
discerning	verb
discerns	verb
disclose	verb
disclosed	verb
discloses	verb
disclosing	verb
discontent	adjective
discount	noun
discounts	noun
discourage	verb
discouraged	verb
discourages	verb
discouraging	verb
discover	verb
discovered	verb
discoveries	noun
discovering	verb
discovers	verb
discovery	noun
discussion	noun
discussions	noun
disease	noun
diseases	noun
disembark	verb
disembarked	verb
disembarking	verb
disembarks	verb
dish	noun
dishes	noun
dishonest	adjective
dishonestly	adverb
disinfect	verb
disinfected	verb
disinfecting	verb
disinfects	verb
disk	noun
disks	noun
disloyal	adjective
dismount	verb
dismounted	verb
dismounting	verb
dismounts	verb
display	noun
displays	noun
dispute	verb
disputed	verb
disputes	verb
disputing	verb
dissolve	verb
dissolved	verb
dissolves	verb
dissolving	verb
distance	noun
distances	noun
distinguish	verb
distinguished	verb
distinguishes	verb
distinguishing	verb
distribute	verb
distributed	verb
distributes	verb
distributing	verb
district	noun
districts	noun
distrust	verb
distrusted	verb
distrusting	verb
distrusts	verb
divest	verb
divested	verb
divesting	verb
divests	verb
divide	verb
divided	verb
divides	verb
dividing	verb
division	noun
divisions	noun
divorce	noun
divorced	adjective
divorces	noun
do	verb
doctor	noun
doctors	noun
document	noun
documents	noun
does	verb
dog	noun
dogs	noun
doing	verb
dolphin	noun
dolphins	noun
domain	noun
domains	noun
dome	noun
domes	noun
domestic	adjective
donation	noun
donations	noun
done	verb
donkey	noun
donkeys	noun
door	noun
doors	noun
doubt	verb
doubted	verb
doubtful	adjective
doubting	verb
doubts	verb
douse	verb
doused	verb
douses	verb
dousing	verb
down	preposition
dozen	numeral
draft	noun
drafts	noun
drag	verb
dragged	verb
dragging	verb
drags	verb
drain	verb
drained	verb
draining	verb
drains	verb
dramatic	adjective
drank	verb
draw	verb
drawer	noun
drawers	noun
drawing	noun
drawn	verb
draws	verb
drench	verb
drenched	verb
drenches	verb
drenching	verb
dress	noun
dresses	noun
drew	verb
drink	noun
drinking	verb
drinks	noun
drip	verb
driped	verb
driping	verb
drips	verb
drive	verb
driven	verb
drives	verb
driveway	noun
driveways	noun
driving	verb
drizzle	verb
drizzled	verb
drizzles	verb
drizzling	verb
drought	noun
droughts	noun
drove	verb
drown	verb
drowned	verb
drowning	verb
drowns	verb
drug	noun
drugs	noun
drum	noun
drums	noun
drunk	verb
duck	noun
duckling	noun
ducks	noun
dug	verb
dumb	adjective
dupe	verb
duped	verb
dupes	verb
duping	verb
duplicate	noun
duplicates	noun
durabilities	noun
durability	noun
during	preposition
dusk	noun
dusks	noun
dust	noun
dusts	noun
dusty	adjective
duties	noun
duty	noun
dwell	verb
dwelled	verb
dwelling	verb
dwells	verb
dwindle	verb
dwindled	verb
dwindles	verb
dwindling	verb
dye	verb
dyeed	verb
dyeing	verb
dyes	verb
dynamic	adjective
dynamically	adverb
dynasties	noun
dynasty	noun
each	determiner
eager	adjective
eagerly	adverb
eagle	noun
eagles	noun
ear	noun
early	adverb
earn	verb
earned	verb
earning	verb
earnings	noun
earns	verb
ears	noun
earthquake	noun
earthquakes	noun
easily	adverb
eastern	adjective
eat	verb
eaten	verb
eating	verb
eats	verb
economic	adjective
economically	adverb
economics	noun
economies	noun
economy	noun
edge	noun
edges	noun
edit	verb
edited	verb
editing	verb
edition	noun
editions	noun
editor	noun
editors	noun
edits	verb
educated	adjective
effect	noun
effectively	adverb
effects	noun
efficiencies	noun
efficiency	noun
efficiently	adverb
effort	noun
efforts	noun
eight	numeral
eighteen	numeral
eighth	numeral
eighty	numeral
either	determiner
elaborate	verb
elaborated	verb
elaborates	verb
elaborating	verb
elastic	adjective
elated	adjective
elbow	noun
elbows	noun
elder	noun
elderly	adjective
elders	noun
elect	verb
elected	verb
electing	verb
electric	adjective
electrical	adjective
electricities	noun
electricity	noun
electromagnetic	adjective
electron	noun
electronic	adjective
electrons	noun
elects	verb
elegant	adjective
element	noun
elements	noun
elephant	noun
elephants	noun
eleven	numeral
eleventh	numeral
elk	noun
elks	noun
email	noun
emails	noun
emancipate	verb
emancipated	verb
emancipates	verb
emancipating	verb
embark	verb
embarked	verb
embarking	verb
embarks	verb
embassies	noun
embassy	noun
embezzle	verb
embezzled	verb
embezzles	verb
embezzling	verb
emerge	verb
emerged	verb
emergencies	noun
emergency	noun
emerges	verb
emerging	verb
emigrate	verb
emigrated	verb
emigrates	verb
emigrating	verb
emotion	noun
emotionally	adverb
emotions	noun
emphasize	verb
emphasized	verb
emphasizes	verb
emphasizing	verb
empire	noun
empires	noun
employ	verb
employed	verb
employee	noun
employees	noun
employer	noun
employers	noun
employing	verb
employs	verb
emptied	verb
empties	verb
empty	verb
emptying	verb
encounter	verb
encountered	verb
encountering	verb
encounters	verb
encourage	verb
encouraged	verb
encourages	verb
encouraging	verb
end	noun
endeavor	verb
endeavored	verb
endeavoring	verb
endeavors	verb
ending	noun
endlessly	adverb
endorse	verb
endorsed	verb
endorses	verb
endorsing	verb
ends	noun
enemies	noun
enemy	noun
energies	noun
energy	noun
enforce	verb
enforced	verb
enforces	verb
enforcing	verb
engine	noun
engineer	noun
engineers	noun
engines	noun
engrave	verb
engraved	verb
engraves	verb
engraving	verb
enlarge	verb
enlarged	verb
enlarges	verb
enlarging	verb
enlist	verb
enlisted	verb
enlisting	verb
enlists	verb
enough	adverb
enroll	verb
enrolled	verb
enrolling	verb
enrolls	verb
enslave	verb
enslaved	verb
enslaves	verb
enslaving	verb
ensure	verb
ensured	verb
ensures	verb
ensuring	verb
enter	verb
entered	verb
entering	verb
enters	verb
entertain	verb
entertained	verb
entertaining	verb
entertains	verb
enthusiastic	adjective
enthusiastically	adverb
entire	adjective
entirely	adverb
entreat	verb
entreated	verb
entreating	verb
entreats	verb
entries	noun
entry	noun
equalities	noun
equality	noun
equalize	verb
equalized	verb
equalizes	verb
equalizing	verb
equally	adverb
equation	noun
equations	noun
equip	verb
equiped	verb
equiping	verb
equips	verb
era	noun
eras	noun
eraser	noun
erasers	noun
erect	verb
erected	verb
erecting	verb
erects	verb
error	noun
errors	noun
escape	verb
escaped	verb
escapes	verb
escaping	verb
especially	adverb
essential	adjective
establish	verb
established	verb
establishes	verb
establishing	verb
estate	noun
estimate	verb
estimated	verb
estimates	verb
estimating	verb
etch	verb
etched	verb
etches	verb
etching	verb
eternal	adjective
evaluate	verb
evaluated	verb
evaluates	verb
evaluating	verb
evaporate	verb
evaporated	verb
evaporates	verb
evaporating	verb
even	adverb
evening	noun
evenly	adverb
event	noun
events	noun
eventually	adverb
every	determiner
everybody	pronoun
everyone	pronoun
everything	pronoun
everywhere	adverb
evidence	noun
evidences	noun
evident	adjective
evidently	adverb
evolution	noun
evolutions	noun
exact	adjective
exam	noun
examine	verb
examined	verb
examines	verb
examining	verb
example	noun
examples	noun
exams	noun
excavate	verb
excavated	verb
excavates	verb
excavating	verb
except	preposition
exceptional	adjective
exceptionally	adverb
excited	adjective
excuse	verb
excused	verb
excuses	verb
excusing	verb
execute	verb
executed	verb
executes	verb
executing	verb
executive	noun
exhibition	noun
exhibitions	noun
exhume	verb
exhumed	verb
exhumes	verb
exhuming	verb
exist	verb
existed	verb
existing	verb
exists	verb
exotic	adjective
expand	verb
expanded	verb
expanding	verb
expands	verb
expect	verb
expected	verb
expectedly	adverb
expecting	verb
expects	verb
experience	noun
experienced	adjective
experiences	noun
experiment	noun
expire	verb
expired	verb
expires	verb
expiring	verb
explain	verb
explained	verb
explaining	verb
explains	verb
explore	verb
explored	verb
explores	verb
exploring	verb
explosive	adjective
exported	adjective
expose	verb
exposed	verb
exposes	verb
exposing	verb
external	adjective
extinguish	verb
extinguished	verb
extinguishes	verb
extinguishing	verb
extort	verb
extorted	verb
extorting	verb
extorts	verb
extract	verb
extracted	verb
extracting	verb
extracts	verb
extraordinarily	adverb
extraordinary	adjective
extreme	adjective
extremely	adverb
eye	noun
eyes	noun
fabric	noun
fabrics	noun
faced	verb
faces	verb
facing	verb
fact	noun
factor	noun
factories	noun
factors	noun
factory	noun
facts	noun
fade	verb
faded	verb
fades	verb
fading	verb
fail	verb
failed	verb
failing	verb
fails	verb
failure	noun
failures	noun
faint	verb
fainted	verb
fainting	verb
faints	verb
fair	noun
fairly	adverb
fairs	noun
faith	noun
faithful	adjective
faiths	noun
fake	adjective
fall	verb
fallen	verb
falling	verb
falls	verb
false	adjective
familiar	adjective
family	noun
far	adjective
fare	noun
fares	noun
farm	noun
farms	noun
fashionable	adjective
fast	adjective
faster	adjective
fastest	adjective
father	noun
fathers	noun
fearful	adjective
fearfully	adverb
fearless	adjective
feasible	adjective
feathered	adjective
fed	verb
federal	adjective
fee	noun
feed	verb
feeding	verb
feeds	verb
feel	verb
feeling	noun
feels	verb
fees	noun
feet	noun
fell	verb
felt	verb
fence	noun
fences	noun
feral	adjective
ferment	verb
fermented	verb
fermenting	verb
ferments	verb
fern	noun
ferns	noun
ferried	verb
ferries	verb
ferry	verb
ferrying	verb
fertile	adjective
fertilize	verb
fertilized	verb
fertilizer	noun
fertilizers	noun
fertilizes	verb
fertilizing	verb
fervent	adjective
festival	noun
festivals	noun
fever	noun
fevers	noun
field	noun
fields	noun
fierce	adjective
fiery	adjective
fifteen	numeral
fifth	numeral
fiftieth	numeral
fifty	numeral
fight	verb
fighting	verb
fights	verb
figuratively	adverb
file	noun
files	noun
fill	verb
filled	verb
fillet	verb
filleted	verb
filleting	verb
fillets	verb
filling	verb
fills	verb
film	noun
films	noun
final	adjective
finally	adverb
financially	adverb
find	verb
finding	noun
findings	noun
finds	verb
finger	noun
fingers	noun
finish	verb
finished	verb
finishes	verb
finishing	verb
fire	noun
fires	noun
firmly	adverb
first	numeral
firstly	adverb
fish	noun
five	numeral
fix	verb
fixed	verb
fixes	verb
fixing	verb
flammable	adjective
flap	verb
flaped	verb
flaping	verb
flaps	verb
flat	adjective
flatten	verb
flattened	verb
flattening	verb
flattens	verb
flavor	noun
flavors	noun
fled	verb
flee	verb
fleeing	verb
flees	verb
flew	verb
flexibilities	noun
flexibility	noun
flexible	adjective
flies	verb
flight	noun
flights	noun
float	verb
floated	verb
floating	verb
floats	verb
flock	noun
flocks	noun
flood	noun
floods	noun
floor	noun
floors	noun
flourish	verb
flourished	verb
flourishes	verb
flourishing	verb
flow	verb
flowed	verb
flower	noun
flowers	noun
flowing	verb
flown	verb
flows	verb
fluctuate	verb
fluctuated	verb
fluctuates	verb
fluctuating	verb
fluctuation	noun
fluctuations	noun
flute	noun
flutes	noun
flutter	verb
fluttered	verb
fluttering	verb
flutters	verb
fly	verb
flying	verb
focus	noun
fog	noun
foggy	adjective
fogs	noun
fold	verb
folded	verb
folder	noun
folders	noun
folding	verb
folds	verb
follow	verb
followed	verb
following	verb
follows	verb
folly	noun
food	noun
foods	noun
foolish	adjective
foot	noun
for	preposition
forbade	verb
forbid	verb
forbidden	verb
forbidding	verb
forbids	verb
force	noun
forces	noun
forecast	verb
forecasted	verb
forecasting	verb
forecasts	verb
foreclose	verb
foreclosed	verb
forecloses	verb
foreclosing	verb
foreground	noun
foregrounds	noun
foreign	adjective
forest	noun
forested	adjective
forests	noun
forget	verb
forgets	verb
forgetting	verb
forgive	verb
forgived	verb
forgives	verb
forgiving	verb
forgot	verb
forgotten	verb
fork	noun
forks	noun
form	noun
formal	adjective
formally	adverb
former	adjective
formerly	adverb
forms	noun
formula	noun
formulas	noun
fortieth	numeral
fortress	noun
fortresses	noun
fortunate	adjective
forty	numeral
forum	noun
forums	noun
forward	adverb
fought	verb
found	verb
foundation	noun
foundations	noun
fountain	noun
fountains	noun
four	numeral
fourteen	numeral
fourth	numeral
fox	noun
foxes	noun
fraction	noun
fractions	noun
fragile	adjective
framework	noun
frameworks	noun
frank	adjective
frankly	adverb
fraud	noun
frauds	noun
freedom	noun
freedoms	noun
freely	adverb
freeze	verb
freezes	verb
freezing	verb
frequencies	noun
frequency	noun
frequent	adjective
frequently	adverb
fresh	adjective
friction	noun
frictions	noun
fridge	noun
fridges	noun
fried	verb
friend	noun
friendly	adjective
friends	noun
fries	verb
frigate	noun
frigates	noun
frigid	adjective
frog	noun
frogs	noun
from	preposition
frontier	noun
frontiers	noun
froze	verb
frozen	verb
fruit	noun
fruits	noun
fry	verb
frying	verb
fuel	noun
fuels	noun
full	adjective
fully	adverb
function	noun
functions	noun
fund	noun
funding	noun
funds	noun
funeral	noun
funerals	noun
fungus	noun
funguses	noun
furnish	verb
furnished	verb
furnishes	verb
furnishing	verb
furry	adjective
furthermore	adverb
future	noun
futures	noun
futuristic	adjective
gain	verb
gained	verb
gaining	verb
gains	verb
galaxies	noun
galaxy	noun
galleries	noun
gallery	noun
gallon	noun
gallons	noun
gallop	verb
galloped	verb
galloping	verb
gallops	verb
gamble	verb
gambled	verb
gambles	verb
gambling	verb
game	noun
games	noun
gap	noun
gaps	noun
garage	noun
garages	noun
garden	noun
gardens	noun
gas	noun
gash	verb
gashed	verb
gashes	verb
gashing	verb
gasoline	noun
gasolines	noun
gather	verb
gathered	verb
gathering	verb
gathers	verb
gauge	noun
gauges	noun
gave	verb
geese	noun
generally	adverb
generator	noun
generators	noun
generous	adjective
genetic	adjective
genius	noun
gentle	adjective
gently	adverb
genuflect	verb
genuflected	verb
genuflecting	verb
genuflects	verb
genuine	adjective
get	verb
gets	verb
getting	verb
gift	noun
gifts	noun
giraffe	noun
giraffes	noun
girl	noun
girls	noun
give	verb
given	verb
gives	verb
giving	verb
glacier	noun
glaciers	noun
glass	noun
glasses	noun
glide	verb
glided	verb
glides	verb
gliding	verb
global	adjective
gloomy	adjective
glove	noun
gloves	noun
glue	noun
glues	noun
gnaw	verb
gnawed	verb
gnawing	verb
gnaws	verb
go	verb
goal	noun
goals	noun
goat	noun
goats	noun
god	noun
gods	noun
goes	verb
going	verb
gold	noun
golds	noun
gone	verb
good	adjective
goods	noun
goose	noun
gorilla	noun
gorillas	noun
got	verb
gotten	verb
govern	verb
governed	verb
governing	verb
government	noun
governments	noun
governs	verb
grab	verb
grabbed	verb
grabbing	verb
grabs	verb
graceful	adjective
grade	noun
grades	noun
gradual	adjective
gradually	adverb
graft	verb
grafted	verb
grafting	verb
grafts	verb
grain	noun
grains	noun
grainy	adjective
gram	noun
grams	noun
granaries	noun
granary	noun
grandfather	noun
grandfathers	noun
grandmother	noun
grandmothers	noun
grape	noun
grapes	noun
graph	noun
graphs	noun
grass	noun
grasses	noun
grassy	adjective
grate	verb
grated	verb
grates	verb
grating	verb
gravities	noun
gravity	noun
graze	verb
grazed	verb
grazes	verb
grazing	verb
grease	verb
greased	verb
greases	verb
greasing	verb
greasy	adjective
great	adjective
greater	adjective
greatest	adjective
greed	noun
greedy	adjective
greet	verb
greeted	verb
greeting	verb
greets	verb
grenade	noun
grenades	noun
grew	verb
grid	noun
grids	noun
grill	verb
grilled	verb
grilling	verb
grills	verb
grind	verb
grinded	verb
grinding	verb
grinds	verb
gross	adjective
group	noun
groups	noun
grovel	verb
groveled	verb
groveling	verb
grovels	verb
grow	verb
growed	verb
growing	verb
grown	verb
grows	verb
growth	noun
growths	noun
guarantee	verb
guaranteeed	verb
guaranteeing	verb
guarantees	verb
guard	verb
guarded	verb
guarding	verb
guards	verb
guest	noun
guests	noun
guitar	noun
guitars	noun
gulf	noun
gulfs	noun
gulp	verb
gulped	verb
gulping	verb
gulps	verb
gun	noun
guns	noun
gut	verb
guted	verb
guting	verb
guts	verb
gym	noun
gyms	noun
habit	noun
habits	noun
had	verb
hail	noun
hails	noun
hair	noun
hairs	noun
hairy	adjective
hall	noun
halls	noun
halt	verb
halted	verb
halting	verb
halts	verb
hammer	noun
hammers	noun
hamster	noun
hamsters	noun
hand	noun
handle	noun
handles	noun
hands	noun
hang	verb
hanging	verb
hangs	verb
happen	verb
happened	verb
happening	verb
happens	verb
happily	adverb
happy	adjective
harbor	noun
harbors	noun
hard	adjective
harden	verb
hardened	verb
hardening	verb
hardens	verb
harder	adjective
hardest	adjective
hardly	adverb
hardware	noun
hardwares	noun
hare	noun
hares	noun
harmful	adjective
harmless	adjective
harmonies	noun
harmony	noun
harsh	adjective
harshly	adverb
harvest	noun
harvests	noun
has	verb
hasten	verb
hastened	verb
hastening	verb
hastens	verb
hastily	adverb
hat	noun
hate	verb
hated	verb
hates	verb
hating	verb
hats	noun
haul	verb
hauled	verb
hauling	verb
hauls	verb
have	verb
having	verb
hawk	noun
hawks	noun
hay	noun
hays	noun
hazard	noun
hazardous	adjective
hazards	noun
he	pronoun
head	noun
heading	noun
headquarters	noun
headquarterses	noun
heads	noun
heal	verb
healed	verb
healing	verb
heals	verb
health	noun
healths	noun
healthy	adjective
heap	noun
heaps	noun
hear	verb
heard	verb
hearing	noun
hears	verb
heart	noun
hearts	noun
heat	noun
heats	noun
heave	verb
heaved	verb
heaves	verb
heavily	adverb
heaving	verb
hectare	noun
hectares	noun
hedge	noun
hedgehog	noun
hedgehogs	noun
hedges	noun
height	noun
heights	noun
held	verb
helmet	noun
helmets	noun
help	noun
helped	verb
helping	verb
helps	noun
hen	noun
hence	adverb
hens	noun
her	determiner
herd	noun
herds	noun
here	adverb
hers	pronoun
herself	pronoun
hesitant	adjective
hesitantly	adverb
hibernate	verb
hibernated	verb
hibernates	verb
hibernating	verb
hid	verb
hidden	verb
hide	verb
hides	verb
hiding	verb
high	adjective
higher	adjective
highest	adjective
highlight	verb
highlighted	verb
highlighting	verb
highlights	verb
highway	noun
highways	noun
hike	verb
hiked	verb
hikes	verb
hiking	verb
hill	noun
hills	noun
hilly	adjective
him	pronoun
himself	pronoun
hip	noun
hippo	noun
hippos	noun
hips	noun
hire	verb
hired	verb
hires	verb
hiring	verb
his	determiner
historic	adjective
historically	adverb
histories	noun
history	noun
hit	verb
hits	verb
hitting	verb
hive	noun
hives	noun
hoist	verb
hoisted	verb
hoisting	verb
hoists	verb
hold	verb
holding	noun
holds	verb
holiday	noun
holidays	noun
hollow	adjective
holy	adjective
home	noun
homes	noun
honest	adjective
honestly	adverb
hoodwink	verb
hoodwinked	verb
hoodwinking	verb
hoodwinks	verb
hope	verb
hoped	verb
hopeful	adjective
hopeless	adjective
hopes	verb
hoping	verb
horizon	noun
horizons	noun
horn	noun
horns	noun
horse	noun
horses	noun
hose	noun
hoses	noun
hospital	noun
hospitals	noun
host	noun
hosts	noun
hot	adjective
hotel	noun
hotels	noun
hotly	adverb
hotter	adjective
hottest	adjective
hour	noun
hourly	adverb
hours	noun
house	noun
houses	noun
housing	noun
hover	verb
hovered	verb
hovering	verb
hovers	verb
however	adverb
humane	adjective
humble	adjective
humid	adjective
hundred	numeral
hundredth	numeral
hung	verb
hunt	verb
hunted	verb
hunting	verb
hunts	verb
hurricane	noun
hurricanes	noun
hurried	verb
hurries	verb
hurry	verb
hurrying	verb
hurt	verb
hurting	verb
hurts	verb
husband	noun
husbands	noun
hydraulic	adjective
hydrogen	noun
hydrogens	noun
hypothesis	noun
hypothesises	noun
i	pronoun
ice	noun
ices	noun
icy	adjective
idea	noun
ideas	noun
identified	verb
identifies	verb
identify	verb
identifying	verb
identities	noun
identity	noun
if	conjunction
ignite	verb
ignited	verb
ignites	verb
igniting	verb
ignore	verb
ignored	verb
ignores	verb
ignoring	verb
illegal	adjective
illegally	adverb
illness	noun
illnesses	noun
image	noun
images	noun
imaginative	adjective
imagine	verb
imagined	verb
imagines	verb
imagining	verb
immediate	adjective
immediately	adverb
immerse	verb
immersed	verb
immerses	verb
immersing	verb
immigrant	noun
immigrants	noun
immigrate	verb
immigrated	verb
immigrates	verb
immigrating	verb
immobile	adjective
immortal	adjective
impact	noun
impacts	noun
impale	verb
impaled	verb
impales	verb
impaling	verb
impatient	adjective
impatiently	adverb
implement	verb
implements	verb
implore	verb
implored	verb
implores	verb
imploring	verb
impolite	adjective
important	adjective
imported	adjective
impossible	adjective
impound	verb
impounded	verb
impounding	verb
impounds	verb
impractical	adjective
impress	verb
impressed	verb
impresses	verb
impressing	verb
imprint	verb
imprinted	verb
imprinting	verb
imprints	verb
improbable	adjective
improbably	adverb
improper	adjective
improperly	adverb
improve	verb
improved	verb
improvement	noun
improvements	noun
improves	verb
improving	verb
in	preposition
inaugurate	verb
inaugurated	verb
inaugurates	verb
inaugurating	verb
incapable	adjective
incentive	noun
inch	noun
inches	noun
incidentally	adverb
income	noun
incomes	noun
incompetent	adjective
increase	verb
increased	verb
increases	verb
increasing	verb
indeed	adverb
index	noun
indexes	noun
indicator	noun
indicators	noun
indifferent	adjective
indifferently	adverb
indigenous	adjective
indirectly	adverb
industries	noun
industry	noun
inert	adjective
inevitably	adverb
infeasible	adjective
infect	verb
infected	verb
infecting	verb
infection	noun
infections	noun
infects	verb
inflation	noun
inflations	noun
influence	noun
influences	noun
informal	adjective
informally	adverb
infrequent	adjective
ingredient	noun
ingredients	noun
inhabit	verb
inhabited	verb
inhabiting	verb
inhabits	verb
inherit	verb
inherited	verb
inheriting	verb
inherits	verb
inhumane	adjective
initial	adjective
initially	adverb
initiate	verb
initiated	verb
initiates	verb
initiating	verb
initiative	noun
injuries	noun
injury	noun
ink	noun
inks	noun
inland	adjective
innovation	noun
innovations	noun
innovative	adjective
inoculate	verb
inoculated	verb
inoculates	verb
inoculating	verb
insect	noun
insects	noun
insecure	adjective
inside	preposition
insignificantly	adverb
insincere	adjective
inspect	verb
inspected	verb
inspecting	verb
inspects	verb
inspire	verb
inspired	verb
inspires	verb
inspiring	verb
install	verb
installed	verb
installing	verb
installs	verb
instance	noun
instances	noun
instant	noun
instantly	adverb
instants	noun
instead	adverb
institute	noun
institutes	noun
instrument	noun
instruments	noun
insure	verb
insured	verb
insures	verb
insuring	verb
integer	noun
integers	noun
intelligence	noun
intelligences	noun
intelligent	adjective
intense	adjective
intensely	adverb
intention	noun
intentionally	adverb
intentions	noun
interest	noun
interested	adjective
interests	noun
interface	noun
interfaces	noun
internal	adjective
international	adjective
interpret	verb
interpreted	verb
interpreting	verb
interprets	verb
intersection	noun
intersections	noun
interview	noun
interviews	noun
intimate	adjective
into	preposition
intolerant	adjective
introduction	noun
introductions	noun
invalid	adjective
invention	noun
inventions	noun
inventive	adjective
invest	verb
invested	verb
investigate	verb
investigated	verb
investigates	verb
investigating	verb
investing	verb
investment	noun
investments	noun
investor	noun
investors	noun
invests	verb
invisible	adjective
invite	verb
invited	verb
invites	verb
inviting	verb
invoice	noun
invoices	noun
iron	noun
irons	noun
irrationally	adverb
irregular	adjective
irregularly	adverb
irrigate	verb
irrigated	verb
irrigates	verb
irrigating	verb
irrigation	noun
irrigations	noun
irritate	verb
irritated	verb
irritates	verb
irritating	verb
is	verb
island	noun
islands	noun
it	pronoun
item	noun
items	noun
itineraries	noun
itinerary	noun
its	determiner
itself	pronoun
ivies	noun
ivy	noun
jacket	noun
jackets	noun
jagged	adjective
jaguar	noun
jaguars	noun
jar	noun
jars	noun
jelly	noun
jewel	noun
jewels	noun
job	noun
jobs	noun
jog	verb
jogged	verb
jogging	verb
jogs	verb
join	verb
joined	verb
joining	verb
joins	verb
jolly	adjective
journey	noun
journeys	noun
joyful	adjective
judge	noun
judges	noun
juice	noun
juices	noun
jump	verb
jumped	verb
jumping	verb
jumps	verb
junction	noun
junctions	noun
jungle	noun
jungles	noun
juries	noun
jury	noun
just	adverb
justice	noun
justices	noun
justified	verb
justifies	verb
justify	verb
justifying	verb
justly	adverb
kangaroo	noun
kangaroos	noun
keen	adjective
keep	verb
keeping	verb
keeps	verb
kept	verb
key	noun
keyboard	noun
keyboards	noun
keys	noun
kidnap	verb
kidnaped	verb
kidnaping	verb
kidnaps	verb
kilometer	noun
kilometers	noun
kind	noun
kindle	verb
kindled	verb
kindles	verb
kindling	verb
kindly	adverb
kinds	noun
king	noun
kingdom	noun
kingdoms	noun
kit	noun
kitchen	noun
kitchens	noun
kits	noun
kitten	noun
kittens	noun
knead	verb
kneaded	verb
kneading	verb
kneads	verb
knee	noun
kneel	verb
kneeled	verb
kneeling	verb
kneels	verb
knees	noun
knew	verb
knife	noun
knit	verb
knited	verb
kniting	verb
knits	verb
knives	noun
knob	noun
knobs	noun
know	verb
knowing	verb
knowledge	noun
knowledges	noun
known	verb
knows	verb
koala	noun
koalas	noun
label	noun
labels	noun
laboratories	noun
laboratory	noun
ladder	noun
ladders	noun
laid	verb
lain	verb
lake	noun
lakes	noun
lamb	noun
lambs	noun
lame	adjective
lamp	noun
lamps	noun
landmark	noun
landmarks	noun
language	noun
languages	noun
largely	adverb
last	adjective
lastly	adverb
late	adjective
lately	adverb
latencies	noun
latency	noun
latent	adjective
latter	adjective
launder	verb
laundered	verb
laundering	verb
launders	verb
law	noun
lawful	adjective
lawn	noun
lawns	noun
laws	noun
lawyer	noun
lawyers	noun
lay	verb
layer	noun
layers	noun
laying	verb
lays	verb
lead	verb
leads	verb
leaf	noun
leafy	adjective
league	noun
leagues	noun
leak	verb
leaked	verb
leaking	verb
leaks	verb
learn	verb
learned	verb
learning	verb
learns	verb
least	adverb
leather	noun
leathers	noun
leave	verb
leaves	noun
leaving	verb
lecture	noun
lectures	noun
led	verb
ledger	noun
ledgers	noun
left	verb
leg	noun
legal	adjective
legally	adverb
legislate	verb
legislated	verb
legislates	verb
legislating	verb
legitimate	adjective
legs	noun
lemon	noun
lemons	noun
lend	verb
lending	verb
lends	verb
length	noun
lengths	noun
lengthy	adjective
lenient	adjective
leniently	adverb
lens	noun
lent	verb
leopard	noun
leopards	noun
less	adverb
lesson	noun
lessons	noun
let	verb
lets	verb
letter	noun
letters	noun
letting	verb
level	noun
levels	noun
lever	noun
levers	noun
liberal	adjective
liberate	verb
liberated	verb
liberates	verb
liberating	verb
liberties	noun
liberty	noun
libraries	noun
library	noun
license	noun
licenses	noun
lick	verb
licked	verb
licking	verb
licks	verb
lid	noun
lids	noun
lie	noun
lies	noun
lift	verb
lifted	verb
lifting	verb
lifts	verb
light	verb
lighter	adjective
lightest	adjective
lighting	verb
lightly	adverb
lightning	noun
lights	verb
like	verb
liked	verb
likely	adjective
likes	verb
liking	verb
lily	noun
limit	noun
limited	adjective
limits	noun
line	noun
lines	noun
lion	noun
lions	noun
lip	noun
lips	noun
liquid	adjective
liquidate	verb
liquidated	verb
liquidates	verb
liquidating	verb
listen	verb
listened	verb
listener	noun
listeners	noun
listening	verb
listens	verb
lit	verb
liter	noun
literally	adverb
liters	noun
little	adjective
live	verb
lived	verb
lives	verb
living	verb
lizard	noun
lizards	noun
loan	noun
loans	noun
lobster	noun
lobsters	noun
local	adjective
location	noun
locations	noun
lock	noun
locks	noun
logically	adverb
lonely	adjective
long	adjective
longer	adjective
longest	adjective
look	verb
looked	verb
looking	verb
looks	verb
loose	adjective
loosely	adverb
loosen	verb
loosened	verb
loosening	verb
loosens	verb
lose	verb
loser	noun
losers	noun
loses	verb
losing	verb
loss	noun
losses	noun
lost	verb
loud	adjective
loudly	adverb
love	verb
loved	verb
lovely	adjective
loves	verb
loving	verb
low	adjective
lower	verb
lowered	verb
lowering	verb
lowers	verb
lowest	adjective
loyal	adjective
lubricate	verb
lubricated	verb
lubricates	verb
lubricating	verb
lug	verb
luged	verb
luggage	noun
luggages	noun
luging	verb
lugs	verb
lukewarm	adjective
lunar	adjective
lunch	noun
lunches	noun
lung	noun
lungs	noun
lush	adjective
lying	verb
lyric	noun
lyrics	noun
machine	noun
machines	noun
made	verb
magnetic	adjective
magnified	verb
magnifies	verb
magnify	verb
magnifying	verb
main	adjective
mainly	adverb
maintain	verb
maintained	verb
maintaining	verb
maintains	verb
maintenance	noun
maintenances	noun
major	adjective
make	verb
makes	verb
making	verb
malignant	adjective
mall	noun
malls	noun
man	noun
manage	verb
managed	verb
manager	noun
managers	noun
manages	verb
managing	verb
mandate	noun
maneuver	noun
maneuvers	noun
manipulate	verb
manipulated	verb
manipulates	verb
manipulating	verb
manual	adjective
manufacture	verb
manufactured	verb
manufactures	verb
manufacturing	verb
manuscript	noun
manuscripts	noun
many	adjective
march	verb
marched	verb
marches	verb
marching	verb
margin	noun
marginally	adverb
margins	noun
marinate	verb
marinated	verb
marinates	verb
marinating	verb
mark	noun
market	noun
markets	noun
marks	noun
marriage	noun
marriages	noun
married	adjective
marsh	noun
marshes	noun
mass	noun
masses	noun
match	noun
matches	noun
mathematically	adverb
mathematics	noun
matrix	noun
matrixes	noun
mattress	noun
mattresses	noun
maximally	adverb
maximize	verb
maximized	verb
maximizes	verb
maximizing	verb
may	verb
maybe	adverb
me	pronoun
meadow	noun
meadows	noun
meal	noun
meals	noun
mean	verb
meander	verb
meandered	verb
meandering	verb
meanders	verb
meaning	noun
means	noun
meant	verb
meanwhile	adverb
measure	verb
measured	verb
measurement	noun
measurements	noun
measures	verb
measuring	verb
mechanical	adjective
medal	noun
medals	noun
median	noun
medians	noun
medicine	noun
medicines	noun
medieval	adjective
meet	verb
meeting	noun
meets	verb
melt	verb
melted	verb
melting	verb
melts	verb
member	noun
members	noun
membership	noun
memo	noun
memories	noun
memorize	verb
memorized	verb
memorizes	verb
memorizing	verb
memory	noun
memos	noun
men	noun
mend	verb
mended	verb
mending	verb
mends	verb
mentally	adverb
mention	verb
mentioned	verb
mentioning	verb
mentions	verb
menu	noun
menus	noun
merchant	noun
merchants	noun
merely	adverb
merge	verb
merged	verb
merges	verb
merging	verb
merry	adjective
message	noun
messages	noun
met	verb
metal	noun
metals	noun
metaphorically	adverb
meter	noun
meters	noun
method	noun
methodically	adverb
methods	noun
metric	noun
metrics	noun
metropolitan	adjective
mice	noun
microscope	noun
microscopes	noun
middle	noun
middles	noun
midnight	noun
midnights	noun
might	verb
migrate	verb
migrated	verb
migrates	verb
migrating	verb
mild	adjective
mildly	adverb
mile	noun
miles	noun
milestone	noun
milestones	noun
milk	noun
milks	noun
milky	adjective
millennium	noun
millenniums	noun
million	numeral
millionth	numeral
mince	verb
minced	verb
minces	verb
mincing	verb
mind	noun
minds	noun
mine	pronoun
mined	verb
mineral	noun
minerals	noun
mines	verb
minimally	adverb
minimize	verb
minimized	verb
minimizes	verb
minimizing	verb
mining	verb
ministries	noun
ministry	noun
minor	adjective
minute	noun
minutes	noun
mirror	noun
mirrors	noun
miserable	adjective
missile	noun
missiles	noun
mission	noun
missions	noun
mist	noun
mists	noun
misty	adjective
mix	verb
mixed	verb
mixes	verb
mixing	verb
mixture	noun
mixtures	noun
mobile	adjective
mockup	noun
mockups	noun
mode	noun
model	noun
models	noun
modem	noun
modems	noun
moderate	adjective
moderately	adverb
modern	adjective
modes	noun
modest	adjective
modification	noun
modifications	noun
modified	verb
modifies	verb
modify	verb
modifying	verb
module	noun
modules	noun
moist	adjective
moisten	verb
moistened	verb
moistening	verb
moistens	verb
mold	verb
molded	verb
molding	verb
molds	verb
molecular	adjective
molecule	noun
molecules	noun
molten	adjective
moment	noun
momentarily	adverb
momentum	noun
momentums	noun
monarchies	noun
monarchy	noun
money	noun
moneys	noun
monitor	noun
monitored	verb
monitoring	verb
monitors	noun
monkey	noun
monkeys	noun
monopoly	noun
monthly	adjective
monument	noun
monuments	noun
mood	noun
moods	noun
moon	noun
moons	noun
moor	verb
moored	verb
mooring	verb
moors	verb
moose	noun
mooses	noun
mop	verb
moped	verb
moping	verb
mops	verb
more	adverb
moreover	adverb
morning	noun
mortal	adjective
moss	noun
mosses	noun
mossy	adjective
most	adverb
mostly	adverb
moth	noun
mother	noun
mothers	noun
moths	noun
motivate	verb
motivated	verb
motivates	verb
motivating	verb
motive	noun
motor	noun
motors	noun
mountain	noun
mountainous	adjective
mountains	noun
mouse	noun
mouth	noun
mouths	noun
movable	adjective
move	verb
moved	verb
moves	verb
movie	noun
movies	noun
moving	verb
mow	verb
mowed	verb
mowing	verb
mows	verb
much	adjective
mud	noun
muddy	adjective
muds	noun
mule	noun
mules	noun
multiplied	verb
multiplies	verb
multiply	verb
multiplying	verb
municipal	adjective
murder	noun
murders	noun
muscle	noun
muscles	noun
museum	noun
museums	noun
mushroom	noun
mushrooms	noun
music	noun
musician	noun
musicians	noun
musics	noun
must	verb
mute	adjective
my	determiner
myself	pronoun
nadir	noun
nadirs	noun
nail	noun
nails	noun
naked	adjective
narrative	noun
narrow	adjective
narrowly	adverb
nation	noun
national	adjective
nations	noun
native	adjective
natural	adjective
naval	adjective
navies	noun
navy	noun
near	preposition
nearer	adjective
nearest	adjective
nearly	adverb
necessarily	adverb
neck	noun
necks	noun
need	verb
needed	verb
needing	verb
needle	noun
needles	noun
needs	verb
negotiate	verb
negotiated	verb
negotiates	verb
negotiating	verb
neighbor	noun
neighborhood	noun
neighborhoods	noun
neighbors	noun
neither	determiner
nephew	noun
nephews	noun
nerve	noun
nerves	noun
nervous	adjective
nervously	adverb
nest	noun
nests	noun
network	noun
networks	noun
neutron	noun
neutrons	noun
never	adverb
nevertheless	adverb
new	adjective
newer	adjective
newest	adjective
news	noun
next	adjective
nibble	verb
nibbled	verb
nibbles	verb
nibbling	verb
niece	noun
nieces	noun
night	noun
nightly	adverb
nights	noun
nimble	adjective
nine	numeral
nineteen	numeral
ninety	numeral
ninth	numeral
nitrogen	noun
nitrogens	noun
no	determiner
nobody	pronoun
node	noun
nodes	noun
noise	noun
noises	noun
noisy	adjective
nominate	verb
nominated	verb
nominates	verb
nominating	verb
none	pronoun
nonetheless	adverb
noon	noun
noons	noun
nor	conjunction
normal	adjective
normalize	verb
normalized	verb
normalizes	verb
normalizing	verb
normally	adverb
northern	adjective
nose	noun
noses	noun
nosy	adjective
not	adverb
notable	adjective
notably	adverb
note	noun
notes	noun
nothing	pronoun
notice	noun
noticed	verb
notices	noun
noticing	verb
notwithstanding	preposition
novel	noun
novels	noun
now	adverb
nowhere	adverb
nuclear	adjective
nucleus	noun
nucleuses	noun
number	noun
numbers	noun
nurse	noun
nurses	noun
oath	noun
oaths	noun
object	noun
objective	noun
objects	noun
obligation	noun
obligations	noun
observation	noun
observations	noun
observe	verb
observed	verb
observes	verb
observing	verb
obsolete	adjective
obtain	verb
obtained	verb
obtaining	verb
obtains	verb
obvious	adjective
obviously	adverb
occasion	noun
occasionally	adverb
occasions	noun
occupation	noun
occupations	noun
occupied	verb
occupies	verb
occupy	verb
occupying	verb
occur	verb
occurred	verb
occurring	verb
occurs	verb
ocean	noun
oceans	noun
octopus	noun
octopuses	noun
odd	adjective
oddly	adverb
odor	noun
odors	noun
of	preposition
off	preposition
offense	noun
offenses	noun
offer	verb
offered	verb
offering	verb
offers	verb
office	noun
officer	noun
officers	noun
offices	noun
official	noun
officially	adverb
officials	noun
offshore	adjective
often	adverb
oil	noun
oils	noun
oily	adjective
old	adjective
older	adjective
oldest	adjective
on	preposition
once	conjunction
one	numeral
oneself	pronoun
onion	noun
onions	noun
only	adverb
onto	preposition
opaque	adjective
open	verb
opened	verb
opening	noun
openly	adverb
opens	verb
opera	noun
operas	noun
operate	verb
operated	verb
operates	verb
operating	verb
operation	noun
operations	noun
opinion	noun
opinions	noun
opponent	noun
opponents	noun
opportunities	noun
opportunity	noun
oppose	verb
opposed	verb
opposes	verb
opposing	verb
oppress	verb
oppressed	verb
oppresses	verb
oppressing	verb
optical	adjective
optimistic	adjective
optimize	verb
optimized	verb
optimizes	verb
optimizing	verb
option	noun
options	noun
or	conjunction
orange	noun
oranges	noun
orbit	noun
orbits	noun
orchard	noun
orchards	noun
orchestra	noun
orchestras	noun
ordinarily	adverb
ordinary	adjective
organ	noun
organic	adjective
organize	verb
organized	verb
organizes	verb
organizing	verb
organs	noun
origin	noun
originally	adverb
origins	noun
orthodox	adjective
oscillate	verb
oscillated	verb
oscillates	verb
oscillating	verb
otherwise	adverb
otter	noun
otters	noun
ounce	noun
ounces	noun
our	determiner
ours	pronoun
ourselves	pronoun
outbid	verb
outbided	verb
outbiding	verb
outbids	verb
outcome	noun
outcomes	noun
outdated	adjective
outline	noun
outlines	noun
outmaneuver	verb
outmaneuvered	verb
outmaneuvering	verb
outmaneuvers	verb
outpost	noun
outposts	noun
outside	preposition
outsmart	verb
outsmarted	verb
outsmarting	verb
outsmarts	verb
outstanding	adjective
outwit	verb
outwited	verb
outwiting	verb
outwits	verb
oven	noun
ovens	noun
over	preposition
overlook	verb
overlooked	verb
overlooking	verb
overlooks	verb
overpay	verb
overpayed	verb
overpaying	verb
overpays	verb
overseas	adjective
overthrow	verb
overthrowed	verb
overthrowing	verb
overthrows	verb
owl	noun
owls	noun
oxygen	noun
oxygens	noun
pack	noun
package	noun
packages	noun
packed	verb
packing	verb
packs	noun
paddock	noun
paddocks	noun
page	noun
pages	noun
paid	verb
pain	noun
pains	noun
paint	noun
painting	noun
paints	noun
palace	noun
palaces	noun
pan	noun
panda	noun
pandas	noun
panel	noun
panels	noun
pans	noun
panther	noun
panthers	noun
pants	noun
pantses	noun
paper	noun
papers	noun
parade	verb
paraded	verb
parades	verb
parading	verb
paragraph	noun
paragraphs	noun
parameter	noun
parameters	noun
parcel	noun
parcels	noun
pardon	verb
pardoned	verb
pardoning	verb
pardons	verb
parent	noun
parents	noun
park	noun
parks	noun
parliament	noun
parliaments	noun
parrot	noun
parrots	noun
partial	adjective
partially	adverb
particle	noun
particles	noun
particularly	adverb
parties	noun
partly	adverb
partner	noun
partners	noun
party	noun
passionate	adjective
passionately	adverb
passive	adjective
passively	adverb
passport	noun
passports	noun
password	noun
passwords	noun
past	preposition
paste	verb
pasted	verb
pastes	verb
pasting	verb
pasts	noun
pasture	noun
pastures	noun
patent	noun
patents	noun
path	noun
paths	noun
patient	noun
patiently	adverb
patients	noun
patrol	verb
patroled	verb
patroling	verb
patrols	verb
pattern	noun
patterns	noun
pause	verb
paused	verb
pauses	verb
pausing	verb
pay	verb
paying	verb
payment	noun
payments	noun
pays	verb
peace	noun
peaces	noun
peach	noun
peaches	noun
peacock	noun
peacocks	noun
pearl	noun
pearls	noun
peck	verb
pecked	verb
pecking	verb
pecks	verb
peculiar	adjective
peel	verb
peeled	verb
peeling	verb
peels	verb
pen	noun
penalize	verb
penalized	verb
penalizes	verb
penalizing	verb
penalties	noun
penalty	noun
pencil	noun
pencils	noun
penetrate	verb
penetrated	verb
penetrates	verb
penetrating	verb
penguin	noun
penguins	noun
pens	noun
people	noun
peoples	noun
pepper	noun
peppers	noun
per	preposition
perceive	verb
perceived	verb
perceives	verb
perceiving	verb
percentage	noun
percentages	noun
perch	verb
perched	verb
perches	verb
perching	verb
perform	verb
performance	noun
performances	noun
performed	verb
performing	verb
performs	verb
perfume	noun
perfumes	noun
perhaps	adverb
period	noun
periods	noun
perish	verb
perished	verb
perishes	verb
perishing	verb
permanent	adjective
permanently	adverb
perpetually	adverb
person	noun
perspective	noun
persuade	verb
persuaded	verb
persuades	verb
persuading	verb
pessimistic	adjective
pesticide	noun
pesticides	noun
pet	noun
pets	noun
pharmacies	noun
pharmacy	noun
phase	noun
phases	noun
photo	noun
photos	noun
physically	adverb
physics	noun
piano	noun
pianos	noun
picture	noun
pictures	noun
pierce	verb
pierced	verb
pierces	verb
piercing	verb
pig	noun
pigeon	noun
pigeons	noun
pigs	noun
pile	verb
piled	verb
piles	verb
piling	verb
pill	noun
pillar	noun
pillars	noun
pillow	noun
pillows	noun
pills	noun
pipe	noun
pipes	noun
pistol	noun
pistols	noun
plain	noun
plains	noun
plan	noun
plane	noun
planes	noun
planet	noun
planets	noun
plankton	noun
planktons	noun
plans	noun
plant	noun
plantation	noun
plantations	noun
plants	noun
plastic	noun
plastics	noun
plate	noun
plateau	noun
plateaus	noun
plates	noun
platform	noun
platforms	noun
play	verb
played	verb
player	noun
players	noun
playing	verb
plays	verb
plead	verb
pleaded	verb
pleading	verb
pleads	verb
please	adverb
pledge	verb
pledged	verb
pledges	verb
pledging	verb
pluck	verb
plucked	verb
plucking	verb
plucks	verb
plummet	verb
plummeted	verb
plummeting	verb
plummets	verb
plunge	verb
plunged	verb
plunges	verb
plunging	verb
pneumatic	adjective
pocket	noun
pockets	noun
poem	noun
poems	noun
poet	noun
poetries	noun
poetry	noun
poets	noun
point	noun
points	noun
polar	adjective
police	noun
polices	noun
policies	noun
policy	noun
polish	verb
polished	verb
polishes	verb
polishing	verb
polite	adjective
politely	adverb
politically	adverb
politics	noun
pollute	verb
polluted	verb
pollutes	verb
polluting	verb
pond	noun
ponds	noun
ponies	noun
pony	noun
poor	adjective
poorer	adjective
poorest	adjective
population	noun
populations	noun
porcupine	noun
porcupines	noun
port	noun
portable	adjective
portrait	noun
portraits	noun
ports	noun
position	noun
positions	noun
possibilities	noun
possibility	noun
possible	adjective
possibly	adverb
post	noun
poster	noun
posters	noun
postpone	verb
postponed	verb
postpones	verb
postponing	verb
posts	noun
pot	noun
potato	noun
potatos	noun
pots	noun
pound	noun
pounds	noun
pour	verb
poured	verb
pouring	verb
pours	verb
powdery	adjective
power	noun
powers	noun
practical	adjective
practically	adverb
practice	noun
practices	noun
praise	verb
praised	verb
praises	verb
praising	verb
pray	verb
prayed	verb
praying	verb
prays	verb
precise	adjective
precisely	adverb
precision	noun
precisions	noun
predict	verb
predictably	adverb
predicted	verb
predicting	verb
predicts	verb
preface	noun
prefaces	noun
prefer	verb
preferred	verb
preferring	verb
prefers	verb
prepare	verb
prepared	verb
prepares	verb
preparing	verb
present	noun
presents	noun
preserve	verb
preserved	verb
preserves	verb
preserving	verb
president	noun
presidents	noun
press	noun
pressure	noun
pressures	noun
presumably	adverb
presume	verb
presumed	verb
presumes	verb
presuming	verb
previous	adjective
previously	adverb
price	noun
prices	noun
prickly	adjective
primarily	adverb
primary	adjective
principal	adjective
printer	noun
printers	noun
prison	noun
prisons	noun
privacies	noun
privacy	noun
private	adjective
privately	adverb
prize	noun
prizes	noun
probable	adjective
probably	adverb
problem	noun
problems	noun
process	noun
processor	noun
processors	noun
proclaim	verb
proclaimed	verb
proclaiming	verb
proclaims	verb
procrastinate	verb
procrastinated	verb
procrastinates	verb
procrastinating	verb
produce	verb
produced	verb
producer	noun
producers	noun
produces	verb
producing	verb
product	noun
productively	adverb
productivities	noun
productivity	noun
products	noun
profession	noun
professions	noun
professor	noun
professors	noun
profile	noun
profiles	noun
profit	noun
profitably	adverb
profits	noun
profound	adjective
program	noun
programs	noun
progress	noun
progresses	noun
project	noun
projects	noun
promise	noun
promises	noun
promote	verb
promoted	verb
promotes	verb
promoting	verb
prompt	noun
promptly	adverb
prompts	noun
proof	noun
proofread	verb
proofreaded	verb
proofreading	verb
proofreads	verb
proofs	noun
proper	adjective
properly	adverb
properties	noun
property	noun
proportion	noun
proportions	noun
proposal	noun
proposals	noun
prosper	verb
prospered	verb
prospering	verb
prospers	verb
prostrate	verb
prostrated	verb
prostrates	verb
prostrating	verb
protect	verb
protected	verb
protecting	verb
protection	noun
protections	noun
protects	verb
protocol	noun
protocols	noun
proton	noun
protons	noun
prototype	noun
prototypes	noun
proud	adjective
prove	verb
proved	verb
proven	verb
proves	verb
provide	verb
provided	verb
provides	verb
providing	verb
province	noun
provinces	noun
proving	verb
prune	verb
pruned	verb
prunes	verb
pruning	verb
public	adjective
publicly	adverb
publish	verb
published	verb
publisher	noun
publishers	noun
publishes	verb
publishing	verb
pull	verb
pulled	verb
pulling	verb
pulls	verb
pulverize	verb
pulverized	verb
pulverizes	verb
pulverizing	verb
pump	noun
pumps	noun
puncture	verb
punctured	verb
punctures	verb
puncturing	verb
punish	verb
punished	verb
punishes	verb
punishing	verb
punishment	noun
punishments	noun
pupil	noun
pupils	noun
puppies	noun
puppy	noun
purified	verb
purifies	verb
purify	verb
purifying	verb
purportedly	adverb
purpose	noun
purposely	adverb
purposes	noun
purse	noun
purses	noun
pursue	verb
pursued	verb
pursues	verb
pursuing	verb
push	verb
pushed	verb
pushes	verb
pushing	verb
put	verb
puts	verb
putting	verb
qualities	noun
quality	noun
quantities	noun
quantity	noun
quench	verb
quenched	verb
quenches	verb
quenching	verb
question	noun
questions	noun
queue	noun
queues	noun
quick	adjective
quickly	adverb
quiet	adjective
quietly	adverb
quit	verb
quite	adverb
quits	verb
quitting	verb
quiver	verb
quivered	verb
quivering	verb
quivers	verb
quiz	noun
quizes	noun
quota	noun
quotas	noun
quotient	noun
quotients	noun
rabbit	noun
rabbits	noun
raccoon	noun
raccoons	noun
race	noun
races	noun
radical	adjective
radioactive	adjective
rainbow	noun
rainbows	noun
rained	verb
raining	verb
rains	verb
rainy	adjective
raise	verb
raised	verb
raises	verb
raising	verb
rally	noun
ran	verb
ranch	noun
ranches	noun
randomly	adverb
range	noun
ranges	noun
rank	noun
ranks	noun
rapid	adjective
rapidly	adverb
rare	adjective
rarely	adverb
rat	noun
rate	noun
rates	noun
rather	adverb
ratified	verb
ratifies	verb
ratify	verb
ratifying	verb
ratio	noun
rationally	adverb
ratios	noun
rats	noun
raven	noun
ravens	noun
raw	adjective
razor	noun
razors	noun
reaction	noun
reactions	noun
reactive	adjective
reactor	noun
reactors	noun
read	verb
reader	noun
readers	noun
reads	verb
real	adjective
realize	verb
realized	verb
realizes	verb
realizing	verb
really	adverb
reap	verb
reaped	verb
reaping	verb
reaps	verb
reason	noun
reasonably	adverb
reasons	noun
rebound	verb
rebounded	verb
rebounding	verb
rebounds	verb
recall	verb
recalled	verb
recalling	verb
recalls	verb
receipt	noun
receipts	noun
receive	verb
received	verb
receives	verb
receiving	verb
recent	adjective
recently	adverb
recession	noun
recessions	noun
recipe	noun
recipes	noun
reclaim	verb
reclaimed	verb
reclaiming	verb
reclaims	verb
recognize	verb
recognized	verb
recognizes	verb
recognizing	verb
recommend	verb
recommended	verb
recommending	verb
recommends	verb
recruit	verb
recruited	verb
recruiting	verb
recruits	verb
rectangle	noun
rectangles	noun
red	adjective
reduce	verb
reduced	verb
reduces	verb
reducing	verb
reef	noun
reefs	noun
referee	noun
referees	noun
refine	verb
refined	verb
refines	verb
refining	verb
reform	noun
reforms	noun
refugee	noun
refugees	noun
refuse	verb
refused	verb
refuses	verb
refusing	verb
regain	verb
regained	verb
regaining	verb
regains	verb
region	noun
regional	adjective
regions	noun
register	verb
registered	verb
registering	verb
registers	verb
regular	adjective
regularly	adverb
regulation	noun
regulations	noun
rehearse	verb
rehearsed	verb
rehearses	verb
rehearsing	verb
reign	verb
reigned	verb
reigning	verb
reigns	verb
reimburse	verb
reimbursed	verb
reimburses	verb
reimbursing	verb
reject	verb
rejected	verb
rejecting	verb
rejects	verb
relatively	adverb
relaxed	adjective
release	verb
released	verb
releases	verb
releasing	verb
reliabilities	noun
reliability	noun
relief	noun
reliefs	noun
religion	noun
religions	noun
relocate	verb
relocated	verb
relocates	verb
relocating	verb
reluctant	adjective
reluctantly	adverb
remainder	noun
remainders	noun
remarkable	adjective
remarkably	adverb
remember	verb
remembered	verb
remembering	verb
remembers	verb
remind	verb
reminded	verb
reminding	verb
reminds	verb
remove	verb
removed	verb
removes	verb
removing	verb
remunerate	verb
remunerated	verb
remunerates	verb
remunerating	verb
renew	verb
renewed	verb
renewing	verb
renews	verb
renovate	verb
renovated	verb
renovates	verb
renovating	verb
repair	noun
repairs	noun
repeal	verb
repealed	verb
repealing	verb
repeals	verb
repeat	verb
repeated	verb
repeatedly	adverb
repeating	verb
repeats	verb
reply	noun
report	noun
reportedly	adverb
reports	noun
repositories	noun
repository	noun
repossess	verb
repossessed	verb
repossesses	verb
repossessing	verb
representative	noun
repress	verb
repressed	verb
represses	verb
repressing	verb
republic	noun
republics	noun
reputation	noun
reputations	noun
requirement	noun
requirements	noun
rescue	verb
rescued	verb
rescues	verb
rescuing	verb
research	noun
researcher	noun
researchers	noun
researches	noun
reservoir	noun
reservoirs	noun
reside	verb
resided	verb
resident	noun
residents	noun
resides	verb
residing	verb
resign	verb
resigned	verb
resigning	verb
resigns	verb
resist	verb
resisted	verb
resisting	verb
resists	verb
resolve	verb
resolved	verb
resolves	verb
resolving	verb
resourceful	adjective
response	noun
responses	noun
responsibilities	noun
responsibility	noun
restaurant	noun
restaurants	noun
restless	adjective
restore	verb
restored	verb
restores	verb
restoring	verb
restriction	noun
restrictions	noun
result	noun
results	noun
resume	verb
resumed	verb
resumes	verb
resuming	verb
resuscitate	verb
resuscitated	verb
resuscitates	verb
resuscitating	verb
retire	verb
retired	verb
retires	verb
retiring	verb
retrieve	verb
retrieved	verb
retrieves	verb
retrieving	verb
return	verb
returned	verb
returning	verb
returns	verb
reveal	verb
revealed	verb
revealing	verb
reveals	verb
revenue	noun
revenues	noun
revise	verb
revised	verb
revises	verb
revising	verb
revision	noun
revisions	noun
revive	verb
revived	verb
revives	verb
reviving	verb
revolution	noun
revolutions	noun
reward	noun
rewards	noun
rhino	noun
rhinos	noun
rhythm	noun
rhythms	noun
rice	noun
rices	noun
rich	adjective
richer	adjective
richest	adjective
ridden	verb
ride	verb
rides	verb
ridiculously	adverb
riding	verb
rifle	noun
rifles	noun
right	noun
rights	noun
rigid	adjective
ring	noun
ripe	adjective
rise	verb
risen	verb
rises	verb
rising	verb
risk	noun
risks	noun
risky	adjective
rival	noun
rivals	noun
river	noun
rivers	noun
road	noun
roads	noun
roam	verb
roamed	verb
roaming	verb
roams	verb
roast	verb
roasted	verb
roasting	verb
roasts	verb
rob	verb
robed	verb
robin	noun
robing	verb
robins	noun
robs	verb
robust	adjective
rock	noun
rocket	noun
rockets	noun
rocks	noun
rocky	adjective
rode	verb
roof	noun
roofs	noun
room	noun
rooms	noun
roost	verb
roosted	verb
rooster	noun
roosters	noun
roosting	verb
roosts	verb
root	noun
roots	noun
rope	noun
ropes	noun
rose	verb
rot	verb
roted	verb
roting	verb
rots	verb
rotten	adjective
rough	adjective
roughly	adverb
roundabout	noun
roundabouts	noun
route	noun
router	noun
routers	noun
routes	noun
routine	noun
routines	noun
row	noun
rows	noun
rub	verb
rubbed	verb
rubber	noun
rubbers	noun
rubbing	verb
rubs	verb
rude	adjective
rudely	adverb
rug	noun
rugged	adjective
rugs	noun
rule	noun
rules	noun
rumor	noun
rumors	noun
run	verb
running	verb
runs	verb
rural	adjective
rush	verb
rushed	verb
rushes	verb
rushing	verb
sacred	adjective
sacrifice	verb
sacrificed	verb
sacrifices	verb
sacrificing	verb
sad	adjective
sadly	adverb
safari	noun
safaris	noun
safe	adjective
safely	adverb
safeties	noun
safety	noun
said	verb
salaries	noun
salary	noun
sale	noun
sales	noun
salt	noun
salts	noun
salty	adjective
salute	verb
saluted	verb
salutes	verb
saluting	verb
sample	noun
samples	noun
sanction	noun
sanctions	noun
sand	noun
sandal	noun
sandals	noun
sands	noun
sandy	adjective
sang	verb
sanitize	verb
sanitized	verb
sanitizes	verb
sanitizing	verb
sank	verb
sat	verb
satellite	noun
satellites	noun
satisfied	verb
satisfies	verb
satisfy	verb
satisfying	verb
saturate	verb
saturated	verb
saturates	verb
saturating	verb
sauce	noun
sauces	noun
saunter	verb
sauntered	verb
sauntering	verb
saunters	verb
savage	adjective
save	verb
saved	verb
saves	verb
saving	verb
savings	noun
saw	verb
say	verb
saying	verb
says	verb
scalabilities	noun
scalability	noun
scald	verb
scalded	verb
scalding	verb
scalds	verb
scale	noun
scales	noun
scaly	adjective
scanner	noun
scanners	noun
scarf	noun
scarfs	noun
scenario	noun
scenarios	noun
scene	noun
scenes	noun
scent	noun
scents	noun
schedule	noun
schedules	noun
scholar	noun
scholars	noun
school	noun
schools	noun
scientific	adjective
scientifically	adverb
scientist	noun
scientists	noun
scissors	noun
scissorses	noun
scorch	verb
scorched	verb
scorches	verb
scorching	verb
score	noun
scores	noun
scrape	verb
scraped	verb
scrapes	verb
scraping	verb
screen	noun
screens	noun
screw	noun
screws	noun
scrub	verb
scrubed	verb
scrubing	verb
scrubs	verb
sculpt	verb
sculpted	verb
sculpting	verb
sculpts	verb
sculpture	noun
sculptures	noun
sea	noun
seal	noun
seals	noun
seas	noun
season	noun
seasons	noun
seaweed	noun
second	numeral
secondary	adjective
secondly	adverb
secretaries	noun
secretary	noun
secretive	adjective
secretly	adverb
section	noun
sections	noun
sector	noun
sectors	noun
securely	adverb
securities	noun
security	noun
see	verb
seed	noun
seeds	noun
seeing	verb
seek	verb
seeking	verb
seeks	verb
seemingly	adverb
seen	verb
sees	verb
seize	verb
seized	verb
seizes	verb
seizing	verb
seldom	adverb
selfish	adjective
selfless	adjective
sell	verb
seller	noun
sellers	noun
selling	verb
sells	verb
senate	noun
send	verb
sending	verb
sends	verb
sense	verb
sensed	verb
senses	verb
sensibly	adverb
sensing	verb
sent	verb
sentence	noun
sentences	noun
separate	adjective
sequence	noun
sequences	noun
serene	adjective
series	noun
seriously	adverb
server	noun
servers	noun
service	noun
services	noun
set	noun
sets	noun
setting	noun
settle	verb
settled	verb
settles	verb
settling	verb
seven	numeral
seventeen	numeral
seventh	numeral
seventy	numeral
severe	adjective
severely	adverb
sew	verb
sewed	verb
sewing	verb
sews	verb
shake	verb
shaken	verb
shakes	verb
shaking	verb
shall	verb
shallow	adjective
shampoo	noun
shampoos	noun
shape	noun
shapes	noun
share	noun
shared	verb
shares	noun
sharing	verb
shark	noun
sharks	noun
sharply	adverb
shatter	verb
shattered	verb
shattering	verb
shatters	verb
she	pronoun
shear	verb
sheared	verb
shearing	verb
shears	verb
sheep	noun
sheet	noun
sheets	noun
shelf	noun
shell	noun
shells	noun
shelves	noun
shield	noun
shields	noun
shift	noun
shifts	noun
shine	verb
shined	verb
shines	verb
shining	verb
ship	noun
ships	noun
shirt	noun
shirts	noun
shiver	verb
shivered	verb
shivering	verb
shivers	verb
shoe	noun
shoes	noun
shook	verb
shoot	verb
shooting	verb
shoots	verb
shop	noun
shops	noun
shore	noun
shores	noun
short	adjective
shortcut	noun
shortcuts	noun
shorter	adjective
shortest	adjective
shortly	adverb
shot	verb
should	verb
shoulder	noun
shoulders	noun
shovel	noun
shovels	noun
show	noun
showed	verb
showing	verb
shown	verb
shows	noun
shrimp	noun
shrimps	noun
shrink	verb
shrinked	verb
shrinking	verb
shrinks	verb
shrub	noun
shrubs	noun
shudder	verb
shuddered	verb
shuddering	verb
shudders	verb
shut	verb
shuts	verb
shutting	verb
shuttle	verb
shuttled	verb
shuttles	verb
shuttling	verb
shy	adjective
sibling	noun
sick	adjective
sign	noun
signal	noun
signals	noun
significant	adjective
significantly	adverb
signs	noun
silent	adjective
silk	noun
silks	noun
silky	adjective
silly	adjective
silo	noun
silos	noun
silver	noun
silvers	noun
simmer	verb
simmered	verb
simmering	verb
simmers	verb
simplicities	noun
simplicity	noun
since	conjunction
sincere	adjective
sincerely	adverb
sing	verb
singe	verb
singed	verb
singer	noun
singers	noun
singes	verb
singing	verb
single	adjective
sings	verb
singular	adjective
sink	verb
sinking	verb
sinks	verb
sip	verb
sipped	verb
sipping	verb
sips	verb
sister	noun
sisters	noun
sit	verb
sits	verb
sitting	verb
situation	noun
situations	noun
six	numeral
sixteen	numeral
sixth	numeral
sixty	numeral
size	noun
sizes	noun
skeleton	noun
skeletons	noun
skeptical	adjective
sketch	noun
sketches	noun
skies	noun
skill	noun
skilled	adjective
skills	noun
skin	noun
skins	noun
skirt	noun
skirts	noun
skunk	noun
skunks	noun
sky	noun
skyrocket	verb
skyrocketed	verb
skyrocketing	verb
skyrockets	verb
slant	verb
slanted	verb
slanting	verb
slants	verb
slash	verb
slashed	verb
slashes	verb
slashing	verb
sleep	verb
sleeping	verb
sleeps	verb
slept	verb
slice	verb
sliced	verb
slices	verb
slicing	verb
slid	verb
slide	verb
slides	verb
sliding	verb
slimy	adjective
slippery	adjective
slither	verb
slithered	verb
slithering	verb
slithers	verb
sloth	noun
sloths	noun
slow	adjective
slower	adjective
slowest	adjective
slowly	adverb
slump	verb
slumped	verb
slumping	verb
slumps	verb
slurp	verb
slurped	verb
slurping	verb
slurps	verb
small	adjective
smaller	adjective
smallest	adjective
smart	adjective
smash	verb
smashed	verb
smashes	verb
smashing	verb
smell	noun
smells	noun
smoke	noun
smokes	noun
smolder	verb
smoldered	verb
smoldering	verb
smolders	verb
smooth	adjective
smoothly	adverb
smother	verb
smothered	verb
smothering	verb
smothers	verb
smuggle	verb
smuggled	verb
smuggles	verb
smuggling	verb
snack	noun
snacks	noun
snail	noun
snails	noun
snake	noun
snakes	noun
snatch	verb
snatched	verb
snatches	verb
snatching	verb
snow	noun
snows	noun
snowy	adjective
so	conjunction
soak	verb
soaked	verb
soaking	verb
soaks	verb
soap	noun
soaps	noun
soar	verb
soared	verb
soaring	verb
soars	verb
socially	adverb
societies	noun
society	noun
sock	noun
socks	noun
sofa	noun
sofas	noun
soft	adjective
soften	verb
softened	verb
softening	verb
softens	verb
softer	adjective
softest	adjective
software	noun
softwares	noun
solar	noun
solars	noun
sold	verb
soldier	noun
soldiers	noun
solid	adjective
solidified	verb
solidifies	verb
solidify	verb
solidifying	verb
solution	noun
solutions	noun
solve	verb
solved	verb
solves	verb
solving	verb
some	determiner
somebody	pronoun
someone	pronoun
something	pronoun
sometimes	adverb
somewhat	adverb
somewhere	adverb
son	noun
song	noun
sons	noun
soon	adverb
soothe	verb
soothed	verb
soothes	verb
soothing	verb
sophisticated	adjective
sorrowful	adjective
sort	noun
sorts	noun
sought	verb
soul	noun
souls	noun
sound	noun
sounds	noun
soup	noun
soups	noun
sour	adjective
source	noun
sources	noun
southern	adjective
sow	verb
sowed	verb
sowing	verb
sows	verb
space	noun
spaces	noun
sparrow	noun
sparrows	noun
sparse	adjective
speak	verb
speaker	noun
speakers	noun
speaking	verb
speaks	verb
spear	noun
spears	noun
species	noun
specific	adjective
specifically	adverb
specimen	noun
specimens	noun
spectrum	noun
spectrums	noun
speech	noun
speeches	noun
speed	noun
speedily	adverb
spelling	noun
spend	verb
spending	verb
spends	verb
spent	verb
sphere	noun
spheres	noun
spice	noun
spices	noun
spicy	adjective
spider	noun
spiders	noun
spill	verb
spilled	verb
spilling	verb
spills	verb
spin	verb
spine	noun
spines	noun
spinning	verb
spins	verb
spiral	verb
spiraled	verb
spiraling	verb
spirals	verb
spirit	noun
spirits	noun
spiritually	adverb
splash	verb
splashed	verb
splashes	verb
splashing	verb
split	verb
splited	verb
spliting	verb
splits	verb
spoil	verb
spoiled	verb
spoiling	verb
spoils	verb
spoke	verb
spoken	verb
sponge	noun
sponges	noun
spoon	noun
spoons	noun
sport	noun
sports	noun
spread	verb
spreading	verb
spreads	verb
spring	noun
sprinkle	verb
sprinkled	verb
sprinkles	verb
sprinkling	verb
sprint	verb
sprinted	verb
sprinting	verb
sprints	verb
spun	verb
square	noun
squares	noun
squeeze	verb
squeezed	verb
squeezes	verb
squeezing	verb
squirrel	noun
squirrels	noun
stabilities	noun
stability	noun
stabilize	verb
stabilized	verb
stabilizes	verb
stabilizing	verb
stable	noun
stables	noun
stadium	noun
stadiums	noun
stage	noun
stages	noun
stagnate	verb
stagnated	verb
stagnates	verb
stagnating	verb
stale	adjective
stall	verb
stalled	verb
stalling	verb
stalls	verb
stamp	noun
stamps	noun
stand	verb
standard	noun
standardize	verb
standardized	verb
standardizes	verb
standardizing	verb
standards	noun
standing	verb
stands	verb
star	noun
stars	noun
start	verb
started	verb
starting	verb
starts	verb
state	noun
states	noun
static	adjective
statically	adverb
station	noun
stations	noun
statue	noun
statues	noun
status	noun
stay	verb
stayed	verb
staying	verb
stays	verb
steadily	adverb
steady	adjective
steal	verb
stealing	verb
steals	verb
steam	noun
steams	noun
steel	noun
steels	noun
steep	adjective
stellar	adjective
step	noun
steps	noun
sterilize	verb
sterilized	verb
sterilizes	verb
sterilizing	verb
stern	adjective
sternly	adverb
stethoscope	noun
stethoscopes	noun
stick	verb
sticking	verb
sticks	verb
sticky	adjective
stiff	adjective
still	adverb
stingy	adjective
stir	verb
stirred	verb
stirring	verb
stirs	verb
stock	noun
stocks	noun
stole	verb
stolen	verb
stomach	noun
stomaches	noun
stone	noun
stones	noun
stony	adjective
stood	verb
storage	noun
storages	noun
store	noun
stores	noun
stories	noun
storm	noun
storms	noun
stormy	adjective
story	noun
stove	noun
stoves	noun
strain	noun
strains	noun
strange	adjective
strangely	adverb
stranger	noun
strangers	noun
strangle	verb
strangled	verb
strangles	verb
strangling	verb
strategic	adjective
strategies	noun
strategy	noun
straw	noun
straws	noun
stream	noun
streams	noun
street	noun
streets	noun
stress	noun
stressed	adjective
stresses	noun
stretch	verb
stretched	verb
stretcher	noun
stretchers	noun
stretches	verb
stretching	verb
strict	adjective
strictly	adverb
stride	verb
strided	verb
strides	verb
striding	verb
strike	verb
strikes	verb
striking	verb
string	noun
strive	verb
strived	verb
strives	verb
striving	verb
stroll	verb
strolled	verb
strolling	verb
strolls	verb
strong	adjective
stronger	adjective
strongest	adjective
strongly	adverb
struck	verb
structure	noun
structures	noun
struggle	verb
struggled	verb
struggles	verb
struggling	verb
stuck	verb
student	noun
students	noun
studies	noun
study	noun
stupid	adjective
sturdy	adjective
stylish	adjective
subdue	verb
subdued	verb
subdues	verb
subduing	verb
submarine	noun
submarines	noun
submerge	verb
submerged	verb
submerges	verb
submerging	verb
subset	noun
subsets	noun
subsidize	verb
subsidized	verb
subsidizes	verb
subsidizing	verb
substantially	adverb
subtle	adjective
subtract	verb
subtracted	verb
subtracting	verb
subtracts	verb
suburban	adjective
succeed	verb
succeeded	verb
succeeding	verb
succeeds	verb
success	noun
successfully	adverb
such	determiner
suck	verb
sucked	verb
sucking	verb
sucks	verb
sudden	adjective
suddenly	adverb
suffocate	verb
suffocated	verb
suffocates	verb
suffocating	verb
sugar	noun
sugars	noun
suitable	adjective
suitably	adverb
suitcase	noun
suitcases	noun
sum	noun
summaries	noun
summarize	verb
summarized	verb
summarizes	verb
summarizing	verb
summary	noun
summer	noun
summers	noun
summit	noun
summits	noun
sums	noun
sun	noun
sung	verb
sunk	verb
sunny	adjective
suns	noun
superficial	adjective
superficially	adverb
supper	noun
suppers	noun
supplier	noun
suppliers	noun
supply	noun
support	noun
supports	noun
suppose	verb
supposed	verb
supposedly	adverb
supposes	verb
supposing	verb
suppress	verb
suppressed	verb
suppresses	verb
suppressing	verb
sure	adjective
surely	adverb
surface	noun
surfaces	noun
surge	noun
surgeon	noun
surgeons	noun
surgeries	noun
surgery	noun
surges	noun
surprise	verb
surprised	verb
surprises	verb
surprising	verb
surprisingly	adverb
survive	verb
survived	verb
survives	verb
surviving	verb
suspect	noun
suspects	noun
suspend	verb
suspended	verb
suspending	verb
suspends	verb
sustain	verb
sustained	verb
sustaining	verb
sustains	verb
swallow	verb
swallowed	verb
swallowing	verb
swallows	verb
swam	verb
swamp	noun
swamps	noun
swan	noun
swans	noun
swarm	noun
swarms	noun
sway	verb
swayed	verb
swaying	verb
sways	verb
swear	verb
swearing	verb
swears	verb
sweater	noun
sweaters	noun
sweep	verb
sweeping	verb
sweeps	verb
sweet	adjective
swept	verb
swift	adjective
swiftly	adverb
swim	verb
swimming	verb
swims	verb
swindle	verb
swindled	verb
swindles	verb
swindling	verb
swing	noun
switch	noun
switches	noun
sword	noun
swords	noun
swore	verb
sworn	verb
swum	verb
symbol	noun
symbols	noun
synthetic	adjective
syringe	noun
syringes	noun
system	noun
systematically	adverb
systems	noun
table	noun
tables	noun
tackle	verb
tackled	verb
tackles	verb
tackling	verb
tactic	noun
tactics	noun
tag	noun
tags	noun
take	verb
taken	verb
takes	verb
taking	verb
tale	noun
talent	noun
talents	noun
tales	noun
talk	verb
talked	verb
talking	verb
talks	verb
tall	adjective
taller	adjective
tallest	adjective
tally	noun
tame	adjective
tank	noun
tanks	noun
tape	noun
taper	verb
tapered	verb
tapering	verb
tapers	verb
tapes	noun
target	noun
targets	noun
tariff	noun
tariffs	noun
task	noun
tasks	noun
taste	noun
tastes	noun
taught	verb
taut	adjective
tax	noun
taxes	noun
tea	noun
teach	verb
teacher	noun
teachers	noun
teaches	verb
teaching	verb
team	noun
teams	noun
tear	verb
tearing	verb
tears	verb
teas	noun
technically	adverb
teenager	noun
teenagers	noun
teeth	noun
telescope	noun
telescopes	noun
tell	verb
telling	verb
tells	verb
temper	noun
temperate	adjective
temperature	noun
temperatures	noun
tempers	noun
temple	noun
temples	noun
temporarily	adverb
temporary	adjective
ten	numeral
tender	noun
tenders	noun
tense	adjective
tension	noun
tensions	noun
tenth	numeral
tepid	adjective
term	noun
terminate	verb
terminated	verb
terminates	verb
terminating	verb
terms	noun
terrestrial	adjective
tertiary	adjective
test	noun
tests	noun
tether	verb
tethered	verb
tethering	verb
tethers	verb
text	noun
texts	noun
than	conjunction
thank	verb
thanked	verb
thanking	verb
thanks	verb
that	determiner
thaw	verb
thawed	verb
thawing	verb
thaws	verb
the	determiner
theater	noun
theaters	noun
theft	noun
thefts	noun
their	determiner
theirs	pronoun
them	pronoun
themselves	pronoun
then	adverb
theoretically	adverb
theories	noun
theory	noun
therapies	noun
therapy	noun
there	adverb
therefore	adverb
thermal	adjective
thermometer	noun
thermometers	noun
these	determiner
they	pronoun
thick	adjective
thicker	adjective
thickest	adjective
thin	adjective
thing	noun
things	noun
think	verb
thinking	verb
thinks	verb
thinner	adjective
thinnest	adjective
third	numeral
thirdly	adverb
thirteen	numeral
thirtieth	numeral
thirty	numeral
this	determiner
thorny	adjective
thoroughly	adverb
those	determiner
though	conjunction
thought	verb
thousand	numeral
thousandth	numeral
thread	noun
threads	noun
threat	noun
threats	noun
three	numeral
threshold	noun
thresholds	noun
threw	verb
thrice	adverb
thrive	verb
thrived	verb
thrives	verb
thriving	verb
throat	noun
throats	noun
through	preposition
throughout	preposition
throughput	noun
throughputs	noun
throw	verb
throwing	verb
thrown	verb
throws	verb
thumb	noun
thumbs	noun
thus	adverb
ticket	noun
tickets	noun
tier	noun
tiers	noun
tiger	noun
tigers	noun
tight	adjective
tighten	verb
tightened	verb
tightening	verb
tightens	verb
tightly	adverb
till	preposition
tilt	verb
tilted	verb
tilting	verb
tilts	verb
timeless	adjective
timely	adverb
timid	adjective
tire	noun
tired	adjective
tires	noun
tissue	noun
tissues	noun
to	preposition
toad	noun
toads	noun
today	adverb
toe	noun
toes	noun
together	adverb
token	noun
tokens	noun
told	verb
tolerant	adjective
toll	noun
tolls	noun
tomato	noun
tomatos	noun
tomorrow	adverb
tongue	noun
tongues	noun
too	adverb
took	verb
tool	noun
tools	noun
tooth	noun
toothbrush	noun
toothbrushes	noun
toothpaste	noun
toothpastes	noun
topple	verb
toppled	verb
topples	verb
toppling	verb
tore	verb
torn	verb
tornado	noun
tornados	noun
total	noun
totally	adverb
totals	noun
tough	adjective
tour	noun
tournament	noun
tournaments	noun
tours	noun
tow	verb
toward	preposition
towards	preposition
towed	verb
towel	noun
towels	noun
tower	noun
towers	noun
towing	verb
town	noun
towns	noun
tows	verb
toxic	adjective
track	noun
tracks	noun
trade	noun
trademark	noun
trademarks	noun
trader	noun
traders	noun
trades	noun
tradition	noun
traditional	adjective
traditions	noun
tragic	adjective
trail	noun
trails	noun
train	noun
training	noun
trains	noun
tranquil	adjective
transaction	noun
transactions	noun
transfer	noun
transfers	noun
transform	verb
transformation	noun
transformations	noun
transformed	verb
transformer	noun
transformers	noun
transforming	verb
transforms	verb
transfuse	verb
transfused	verb
transfuses	verb
transfusing	verb
transition	noun
transitions	noun
translate	verb
translated	verb
translates	verb
translating	verb
transparencies	noun
transparency	noun
transparent	adjective
transplant	verb
transplanted	verb
transplanting	verb
transplants	verb
transport	verb
transported	verb
transporting	verb
transports	verb
travel	noun
travels	noun
treaties	noun
treatment	noun
treatments	noun
treaty	noun
tree	noun
trees	noun
trek	verb
treked	verb
treking	verb
treks	verb
tremble	verb
trembled	verb
trembles	verb
trembling	verb
trench	noun
trenches	noun
trend	noun
trends	noun
trendy	adjective
trial	noun
trials	noun
triangle	noun
triangles	noun
tribe	noun
tribes	noun
tried	verb
tries	verb
trillion	numeral
trip	noun
trips	noun
troop	noun
troops	noun
trophies	noun
trophy	noun
tropical	adjective
trot	verb
troted	verb
troting	verb
trots	verb
trough	noun
troughs	noun
trousers	noun
trouserses	noun
truck	noun
trucks	noun
true	adjective
truly	adverb
trumpet	noun
trumpets	noun
trust	verb
trusted	verb
trusting	verb
trusts	verb
truth	noun
truths	noun
try	verb
trying	verb
tube	noun
tubes	noun
tumble	verb
tumbled	verb
tumbles	verb
tumbling	verb
tune	noun
tunes	noun
tunnel	noun
tunnels	noun
turbine	noun
turbines	noun
turbulent	adjective
turkey	noun
turkeys	noun
turn	verb
turned	verb
turning	verb
turns	verb
turtle	noun
turtles	noun
twelfth	numeral
twelve	numeral
twentieth	numeral
twenty	numeral
twice	adverb
twist	verb
twisted	verb
twisting	verb
twists	verb
two	numeral
type	noun
types	noun
typical	adjective
typically	adverb
ugly	adjective
ultimate	adjective
ultimately	adverb
unable	adjective
uncertain	adjective
uncertainly	adverb
uncle	noun
uncles	noun
uncommonly	adverb
uncover	verb
uncovered	verb
uncovering	verb
uncovers	verb
under	preposition
underneath	preposition
underpay	verb
underpayed	verb
underpaying	verb
underpays	verb
understand	verb
understanding	verb
understands	verb
understood	verb
undertake	verb
undertaked	verb
undertakes	verb
undertaking	verb
underwrite	verb
underwrited	verb
underwrites	verb
underwriting	verb
undoubtedly	adverb
unequally	adverb
unevenly	adverb
unexpected	adjective
unexpectedly	adverb
unfair	adjective
unfairly	adverb
unfaithful	adjective
unfamiliar	adjective
unfit	adjective
unfold	verb
unfolded	verb
unfolding	verb
unfolds	verb
unique	adjective
unit	noun
united	adjective
units	noun
universe	noun
universes	noun
universities	noun
university	noun
unjust	adjective
unkind	adjective
unlawful	adjective
unleash	verb
unleashed	verb
unleashes	verb
unleashing	verb
unless	conjunction
unlikely	adjective
unlink	verb
unlinked	verb
unlinking	verb
unlinks	verb
unload	verb
unloaded	verb
unloading	verb
unloads	verb
unnecessarily	adverb
unofficially	adverb
unorthodox	adjective
unpack	verb
unpacked	verb
unpacking	verb
unpacks	verb
unpredictably	adverb
unprofitably	adverb
unreasonably	adverb
unsafe	adjective
unskilled	adjective
unstable	adjective
unsuccessfully	adverb
unsuitable	adjective
unsure	adjective
unsurprisingly	adverb
until	preposition
unto	preposition
unusual	adjective
unwilling	adjective
unwrap	verb
unwraped	verb
unwraping	verb
unwraps	verb
up	preposition
update	noun
updates	noun
upgrade	noun
upgrades	noun
upon	preposition
uproot	verb
uprooted	verb
uprooting	verb
uproots	verb
urban	adjective
us	pronoun
use	verb
used	verb
user	noun
users	noun
uses	verb
using	verb
usual	adjective
usually	adverb
usurp	verb
usurped	verb
usurping	verb
usurps	verb
utterly	adverb
vacant	adjective
vacation	noun
vacations	noun
vaccinate	verb
vaccinated	verb
vaccinates	verb
vaccinating	verb
vaccine	noun
vaccines	noun
vacuum	verb
vacuumed	verb
vacuuming	verb
vacuums	verb
vague	adjective
vaguely	adverb
vain	adjective
valid	adjective
validate	verb
validated	verb
validates	verb
validating	verb
valley	noun
valleys	noun
value	noun
values	noun
vanish	verb
vanished	verb
vanishes	verb
vanishing	verb
vanquish	verb
vanquished	verb
vanquishes	verb
vanquishing	verb
variable	noun
variables	noun
varied	verb
varies	verb
varieties	noun
variety	noun
vary	verb
varying	verb
vase	noun
vases	noun
vault	noun
vaults	noun
vector	noun
vectors	noun
vegetable	noun
vegetables	noun
velocities	noun
velocity	noun
velvety	adjective
vendor	noun
vendors	noun
venue	noun
venues	noun
verdant	adjective
verified	verb
verifies	verb
verify	verb
verifying	verb
versatile	adjective
verse	noun
verses	noun
version	noun
versions	noun
versus	preposition
very	adverb
veto	verb
vetoed	verb
vetoing	verb
vetos	verb
via	preposition
vibrate	verb
vibrated	verb
vibrates	verb
vibrating	verb
victim	noun
victims	noun
video	noun
videos	noun
viewer	noun
viewers	noun
village	noun
villages	noun
vine	noun
vines	noun
vineyard	noun
vineyards	noun
vintage	adjective
violin	noun
violins	noun
virus	noun
visa	noun
visas	noun
visible	adjective
visit	verb
visited	verb
visiting	verb
visitor	noun
visitors	noun
visits	verb
vital	adjective
voice	noun
voices	noun
volatile	adjective
volcano	noun
volcanos	noun
volume	noun
volumes	noun
volunteer	verb
volunteered	verb
volunteering	verb
volunteers	verb
vote	noun
voted	verb
voter	noun
voters	noun
votes	verb
voting	verb
voucher	noun
vouchers	noun
vow	verb
vowed	verb
vowing	verb
vows	verb
voyage	noun
voyages	noun
wage	noun
wager	verb
wagered	verb
wagering	verb
wagers	verb
wages	noun
wait	verb
waited	verb
waiting	verb
waits	verb
wake	verb
wakes	verb
waking	verb
walk	verb
walked	verb
walking	verb
walks	verb
wall	noun
wallet	noun
wallets	noun
walls	noun
wander	verb
wandered	verb
wandering	verb
wanders	verb
wane	verb
waned	verb
wanes	verb
waning	verb
want	verb
wanted	verb
wanting	verb
wants	verb
war	noun
wardrobe	noun
wardrobes	noun
warehouse	noun
warehouses	noun
warm	adjective
warmer	adjective
warmest	adjective
warmly	adverb
warning	noun
wars	noun
was	verb
wash	verb
washed	verb
washes	verb
washing	verb
waste	verb
wasted	verb
wastes	verb
wasting	verb
watch	verb
watched	verb
watches	verb
watching	verb
water	noun
waterfall	noun
waterfalls	noun
waters	noun
watery	adjective
wave	noun
wavelength	noun
wavelengths	noun
waves	noun
we	pronoun
weak	adjective
weaker	adjective
weakest	adjective
weakly	adverb
weapon	noun
weapons	noun
wear	verb
wearing	verb
wears	verb
weary	adjective
weather	noun
weathers	noun
weave	verb
weaved	verb
weaves	verb
weaving	verb
web	noun
webs	noun
website	noun
websites	noun
wedding	noun
weekly	adjective
weight	noun
weights	noun
weird	adjective
well	adverb
went	verb
were	verb
western	adjective
wet	adjective
whale	noun
whales	noun
what	pronoun
whatever	determiner
wheat	noun
wheats	noun
wheel	noun
wheelchair	noun
wheelchairs	noun
wheels	noun
whereas	conjunction
whether	conjunction
which	pronoun
whichever	determiner
while	conjunction
whisk	verb
whisked	verb
whisking	verb
whisks	verb
whistle	noun
whistles	noun
who	pronoun
whole	adjective
wholly	adverb
whom	pronoun
whose	pronoun
wicked	adjective
wide	adjective
widely	adverb
wider	adjective
widest	adjective
widowed	adjective
width	noun
widths	noun
wife	noun
wild	adjective
will	verb
willing	adjective
willingly	adverb
win	verb
winch	verb
winched	verb
winches	verb
winching	verb
wind	verb
winding	verb
window	noun
windows	noun
winds	verb
windy	adjective
wine	noun
wines	noun
wing	noun
winner	noun
winners	noun
wins	verb
winter	noun
winters	noun
wipe	verb
wiped	verb
wipes	verb
wiping	verb
wire	noun
wired	adjective
wireless	adjective
wires	noun
wisdom	noun
wisdoms	noun
wise	adjective
wish	verb
wished	verb
wishes	verb
wishing	verb
with	preposition
withdraw	verb
withdrawal	noun
withdrawals	noun
withdrawing	verb
withdrawn	verb
withdraws	verb
withdrew	verb
within	preposition
without	preposition
witness	noun
wives	noun
woke	verb
woken	verb
wolf	noun
wolves	noun
woman	noun
women	noun
won	verb
wood	noun
wooded	adjective
woods	noun
wool	noun
wools	noun
word	noun
words	noun
wore	verb
work	noun
worked	verb
worker	noun
workers	noun
working	verb
works	noun
worm	noun
worms	noun
worn	verb
worried	adjective
worse	adjective
worsen	verb
worsened	verb
worsening	verb
worsens	verb
worship	noun
worst	adjective
would	verb
wound	noun
wounds	noun
wrap	verb
wrapped	verb
wrapping	verb
wraps	verb
wrench	noun
wrenches	noun
wrist	noun
wrists	noun
write	verb
writer	noun
writers	noun
writes	verb
writing	verb
written	verb
wrong	adjective
wrongly	adverb
wrote	verb
yard	noun
yards	noun
yearly	adjective
yesterday	adverb
yet	conjunction
you	pronoun
young	adjective
younger	adjective
youngest	adjective
your	determiner
yours	pronoun
yourself	pronoun
yourselves	pronoun
youth	noun
youths	noun
zealous	adjective
zebra	noun
zebras	noun
zenith	noun
zeniths	noun
zero	numeral
zigzag	verb
zigzaged	verb
zigzaging	verb
zigzags	verb
zipper	noun
zippers	noun
zone	noun
zones	noun
zoo	noun
zoos	noun
[relations]
but	contrast
however	contrast
yet	contrast
whereas	contrast
conversely	contrast
instead	contrast
although	concessive
though	concessive
despite	concessive
even though	concessive
nevertheless	concessive
nonetheless	concessive
notwithstanding	concessive
albeit	concessive
because	causal
since	causal
due to	causal
owing to	causal
so	result
therefore	result
thus	result
hence	result
consequently	result
accordingly	result
if	conditional
unless	conditional
provided that	conditional
moreover	progressive
furthermore	progressive
additionally	progressive
besides	progressive
than	comparative
compared to	comparative
compared with	comparative
versus	comparative
and	coordinate
or	coordinate
nor	coordinate
)LEX";

}  // namespace pshrink
