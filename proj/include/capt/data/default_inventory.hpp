#pragma once

// Generated from data/inventory.tsv by tools/embed_data.py. Do not edit.

#include <string_view>

namespace capt::data {

inline constexpr std::string_view kDefaultInventoryTsv =
    R"CAPT(# Hindi phoneme inventory, format version 1.)CAPT" "\n"
    R"CAPT(# Token ids 0-63 are phonemes; 64 = end-of-word, 65 = end-of-sentence, 66 = padding.)CAPT" "\n"
    R"CAPT(# Nukta letters are written decomposed (base letter + U+093C).)CAPT" "\n"
    R"CAPT(# id	ipa	devanagari_forms	category	place	manner	voiced	aspirated	length	nasalized	rounded	height	backness)CAPT" "\n"
    R"CAPT(0	ə	अ	vowel	none	vowel	yes	no	short	no	no	mid	central)CAPT" "\n"
    R"CAPT(1	aː	आ,ा	vowel	none	vowel	yes	no	long	no	no	open	central)CAPT" "\n"
    R"CAPT(2	ɪ	इ,ि	vowel	none	vowel	yes	no	short	no	no	near_close	front)CAPT" "\n"
    R"CAPT(3	iː	ई,ी	vowel	none	vowel	yes	no	long	no	no	close	front)CAPT" "\n"
    R"CAPT(4	ʊ	उ,ु	vowel	none	vowel	yes	no	short	no	yes	near_close	back)CAPT" "\n"
    R"CAPT(5	uː	ऊ,ू	vowel	none	vowel	yes	no	long	no	yes	close	back)CAPT" "\n"
    R"CAPT(6	eː	ए,े	vowel	none	vowel	yes	no	long	no	no	close_mid	front)CAPT" "\n"
    R"CAPT(7	ɛː	ऐ,ै	vowel	none	vowel	yes	no	long	no	no	open_mid	front)CAPT" "\n"
    R"CAPT(8	oː	ओ,ो	vowel	none	vowel	yes	no	long	no	yes	close_mid	back)CAPT" "\n"
    R"CAPT(9	ɔː	औ,ौ	vowel	none	vowel	yes	no	long	no	yes	open_mid	back)CAPT" "\n"
    R"CAPT(10	æ	ऍ,ॅ	vowel	none	vowel	yes	no	short	no	no	near_open	front)CAPT" "\n"
    R"CAPT(11	ɔ	ऑ,ॉ	vowel	none	vowel	yes	no	short	no	yes	open_mid	back)CAPT" "\n"
    R"CAPT(12	əɪ	-	diphthong	none	vowel	yes	no	long	no	no	mid	central)CAPT" "\n"
    R"CAPT(13	əʊ	-	diphthong	none	vowel	yes	no	long	no	yes	mid	central)CAPT" "\n"
    R"CAPT(14	ə̃	अँ	vowel	none	vowel	yes	no	short	yes	no	mid	central)CAPT" "\n"
    R"CAPT(15	ãː	आँ,ाँ	vowel	none	vowel	yes	no	long	yes	no	open	central)CAPT" "\n"
    R"CAPT(16	ɪ̃	इँ,िँ	vowel	none	vowel	yes	no	short	yes	no	near_close	front)CAPT" "\n"
    R"CAPT(17	ĩː	ईं,ीं	vowel	none	vowel	yes	no	long	yes	no	close	front)CAPT" "\n"
    R"CAPT(18	ʊ̃	उँ,ुँ	vowel	none	vowel	yes	no	short	yes	yes	near_close	back)CAPT" "\n"
    R"CAPT(19	ũː	ऊँ,ूँ	vowel	none	vowel	yes	no	long	yes	yes	close	back)CAPT" "\n"
    R"CAPT(20	ẽː	एँ,ें	vowel	none	vowel	yes	no	long	yes	no	close_mid	front)CAPT" "\n"
    R"CAPT(21	ɛ̃ː	ऐं,ैं	vowel	none	vowel	yes	no	long	yes	no	open_mid	front)CAPT" "\n"
    R"CAPT(22	õː	ओं,ों	vowel	none	vowel	yes	no	long	yes	yes	close_mid	back)CAPT" "\n"
    R"CAPT(23	ɔ̃ː	औं,ौं	vowel	none	vowel	yes	no	long	yes	yes	open_mid	back)CAPT" "\n"
    R"CAPT(24	k	क	consonant	velar	plosive	no	no	none	no	no	none	none)CAPT" "\n"
    R"CAPT(25	kʰ	ख	consonant	velar	plosive	no	yes	none	no	no	none	none)CAPT" "\n"
    R"CAPT(26	g	ग	consonant	velar	plosive	yes	no	none	no	no	none	none)CAPT" "\n"
    R"CAPT(27	gʱ	घ	consonant	velar	plosive	yes	yes	none	no	no	none	none)CAPT" "\n"
    R"CAPT(28	ŋ	ङ	consonant	velar	nasal	yes	no	none	no	no	none	none)CAPT" "\n"
    R"CAPT(29	tʃ	च	consonant	palatal	affricate	no	no	none	no	no	none	none)CAPT" "\n"
    R"CAPT(30	tʃʰ	छ	consonant	palatal	affricate	no	yes	none	no	no	none	none)CAPT" "\n"
    R"CAPT(31	dʒ	ज	consonant	palatal	affricate	yes	no	none	no	no	none	none)CAPT" "\n"
    R"CAPT(32	dʒʱ	झ	consonant	palatal	affricate	yes	yes	none	no	no	none	none)CAPT" "\n"
    R"CAPT(33	ɲ	ञ	consonant	palatal	nasal	yes	no	none	no	no	none	none)CAPT" "\n"
    R"CAPT(34	ʈ	ट	consonant	retroflex	plosive	no	no	none	no	no	none	none)CAPT" "\n"
    R"CAPT(35	ʈʰ	ठ	consonant	retroflex	plosive	no	yes	none	no	no	none	none)CAPT" "\n"
    R"CAPT(36	ɖ	ड	consonant	retroflex	plosive	yes	no	none	no	no	none	none)CAPT" "\n"
    R"CAPT(37	ɖʱ	ढ	consonant	retroflex	plosive	yes	yes	none	no	no	none	none)CAPT" "\n"
    R"CAPT(38	ɳ	ण	consonant	retroflex	nasal	yes	no	none	no	no	none	none)CAPT" "\n"
    R"CAPT(39	t̪	त	consonant	dental	plosive	no	no	none	no	no	none	none)CAPT" "\n"
    R"CAPT(40	t̪ʰ	थ	consonant	dental	plosive	no	yes	none	no	no	none	none)CAPT" "\n"
    R"CAPT(41	d̪	द	consonant	dental	plosive	yes	no	none	no	no	none	none)CAPT" "\n"
    R"CAPT(42	d̪ʱ	ध	consonant	dental	plosive	yes	yes	none	no	no	none	none)CAPT" "\n"
    R"CAPT(43	n	न	consonant	dental	nasal	yes	no	none	no	no	none	none)CAPT" "\n"
    R"CAPT(44	p	प	consonant	labial	plosive	no	no	none	no	no	none	none)CAPT" "\n"
    R"CAPT(45	pʰ	फ	consonant	labial	plosive	no	yes	none	no	no	none	none)CAPT" "\n"
    R"CAPT(46	b	ब	consonant	labial	plosive	yes	no	none	no	no	none	none)CAPT" "\n"
    R"CAPT(47	bʱ	भ	consonant	labial	plosive	yes	yes	none	no	no	none	none)CAPT" "\n"
    R"CAPT(48	m	म	consonant	labial	nasal	yes	no	none	no	no	none	none)CAPT" "\n"
    R"CAPT(49	j	य	consonant	palatal	approximant	yes	no	none	no	no	none	none)CAPT" "\n"
    R"CAPT(50	l	ल	consonant	alveolar	approximant	yes	no	none	no	no	none	none)CAPT" "\n"
    R"CAPT(51	ʋ	व	consonant	labiodental	approximant	yes	no	none	no	no	none	none)CAPT" "\n"
    R"CAPT(52	r	र	consonant	alveolar	flap	yes	no	none	no	no	none	none)CAPT" "\n"
    R"CAPT(53	ɽ	ड़	consonant	retroflex	flap	yes	no	none	no	no	none	none)CAPT" "\n"
    R"CAPT(54	ɽʱ	ढ़	consonant	retroflex	flap	yes	yes	none	no	no	none	none)CAPT" "\n"
    R"CAPT(55	s	स	consonant	alveolar	fricative	no	no	none	no	no	none	none)CAPT" "\n"
    R"CAPT(56	ʃ	श	consonant	palatal	fricative	no	no	none	no	no	none	none)CAPT" "\n"
    R"CAPT(57	ʂ	ष	consonant	retroflex	fricative	no	no	none	no	no	none	none)CAPT" "\n"
    R"CAPT(58	ɦ	ह	consonant	glottal	fricative	yes	no	none	no	no	none	none)CAPT" "\n"
    R"CAPT(59	f	फ़	consonant	labiodental	fricative	no	no	none	no	no	none	none)CAPT" "\n"
    R"CAPT(60	z	ज़	consonant	alveolar	fricative	yes	no	none	no	no	none	none)CAPT" "\n"
    R"CAPT(61	x	ख़	consonant	velar	fricative	no	no	none	no	no	none	none)CAPT" "\n"
    R"CAPT(62	ɣ	ग़	consonant	velar	fricative	yes	no	none	no	no	none	none)CAPT" "\n"
    R"CAPT(63	q	क़	consonant	uvular	plosive	no	no	none	no	no	none	none)CAPT" "\n";

}  // namespace capt::data
