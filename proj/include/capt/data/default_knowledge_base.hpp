#pragma once

// Generated from data/knowledge_base.tsv by tools/embed_data.py. Do not edit.

#include <string_view>

namespace capt::data {

inline constexpr std::string_view kDefaultKnowledgeBaseTsv =
    R"CAPT(# Articulatory knowledge base, format version 1. One row per inventory phoneme.)CAPT" "\n"
    R"CAPT(# descriptors: comma-separated tags. common_errors: id:hint pairs joined by |, or -.)CAPT" "\n"
    R"CAPT(# tongue_spline: five x,y control points joined by ; in head coordinates (x grows toward the throat, y grows downward).)CAPT" "\n"
    R"CAPT(# constriction: x,y or -.)CAPT" "\n"
    R"CAPT(# id	ipa	descriptors	tongue_text	lips_text	teeth_text	airflow_text	voicing_text	tongue_text_hi	lips_text_hi	teeth_text_hi	airflow_text_hi	voicing_text_hi	common_errors	tongue_spline	velum_open	lips	constriction)CAPT" "\n"
    R"CAPT(0	ə	short,mid,central,unrounded,vowel	Keep the tongue relaxed at mid height, with the tongue centred in the mouth.	Keep the lips relaxed and slightly open.	Keep the teeth a finger's width apart.	Let the air flow freely through the mouth only; no air escapes through the nose.	The vocal cords vibrate throughout. Keep the vowel short and light.	जीभ मध्यम और बीच में रखें।	होंठ ढीले और थोड़े खुले रखें।	दाँतों के बीच एक उँगली जितनी दूरी रखें।	हवा केवल मुँह से निकलने दें; नाक से नहीं।	स्वरतंत्रियाँ पूरे समय काँपती हैं। स्वर छोटा और हल्का रखें।	14:Keep the air out of the nose; nasalizing gives /ə̃/.|1:Make the vowel short; the long version is /aː/.|2:Tongue height matters: /ɪ/ has the tongue near-close.	0.18,0.56;0.40,0.52;0.52,0.46;0.64,0.52;0.82,0.68	no	neutral	-)CAPT" "\n"
    R"CAPT(1	aː	long,open,central,unrounded,vowel	Drop the jaw and keep the tongue low and flat, with the tongue centred in the mouth.	Keep the lips relaxed and slightly open.	Open the teeth wide apart.	Let the air flow freely through the mouth only; no air escapes through the nose.	The vocal cords vibrate throughout. Hold the vowel about twice as long as its short partner.	जीभ नीची और बीच में रखें।	होंठ ढीले और थोड़े खुले रखें।	दाँत खुलकर अलग रखें।	हवा केवल मुँह से निकलने दें; नाक से नहीं।	स्वरतंत्रियाँ पूरे समय काँपती हैं। स्वर को लगभग दोगुना लंबा खींचें।	15:Keep the air out of the nose; nasalizing gives /ãː/.|0:Make the vowel long; the short version is /ə/.|3:Tongue height matters: /iː/ has the tongue close.	0.18,0.56;0.40,0.64;0.52,0.58;0.64,0.64;0.82,0.68	no	neutral	-)CAPT" "\n"
    R"CAPT(2	ɪ	short,near_close,front,unrounded,vowel	Raise the tongue fairly high, a little lower and looser than for the long vowel, with the front of the tongue pushed forward.	Spread the lips slightly, as in a faint smile.	Keep the teeth close together without touching.	Let the air flow freely through the mouth only; no air escapes through the nose.	The vocal cords vibrate throughout. Keep the vowel short and light.	जीभ कुछ ऊँची और आगे की ओर रखें।	होंठ हल्के फैलाएँ, जैसे मुस्कुराते समय।	दाँत पास-पास रखें, पर मिलाएँ नहीं।	हवा केवल मुँह से निकलने दें; नाक से नहीं।	स्वरतंत्रियाँ पूरे समय काँपती हैं। स्वर छोटा और हल्का रखें।	10:Tongue height matters: /æ/ has the tongue near-open.|16:Keep the air out of the nose; nasalizing gives /ɪ̃/.|0:Tongue height matters: /ə/ has the tongue mid.	0.18,0.56;0.28,0.45;0.40,0.39;0.52,0.45;0.82,0.68	no	spread	-)CAPT" "\n"
    R"CAPT(3	iː	long,close,front,unrounded,vowel	Raise the tongue high toward the roof of the mouth, with the front of the tongue pushed forward.	Spread the lips slightly, as in a faint smile.	Keep the teeth close together without touching.	Let the air flow freely through the mouth only; no air escapes through the nose.	The vocal cords vibrate throughout. Hold the vowel about twice as long as its short partner.	जीभ ऊँची और आगे की ओर रखें।	होंठ हल्के फैलाएँ, जैसे मुस्कुराते समय।	दाँत पास-पास रखें, पर मिलाएँ नहीं।	हवा केवल मुँह से निकलने दें; नाक से नहीं।	स्वरतंत्रियाँ पूरे समय काँपती हैं। स्वर को लगभग दोगुना लंबा खींचें।	6:Tongue height matters: /eː/ has the tongue close-mid.|7:Tongue height matters: /ɛː/ has the tongue open-mid.|17:Keep the air out of the nose; nasalizing gives /ĩː/.	0.18,0.56;0.28,0.42;0.40,0.36;0.52,0.42;0.82,0.68	no	spread	-)CAPT" "\n"
    R"CAPT(4	ʊ	short,near_close,back,rounded,vowel	Raise the tongue fairly high, a little lower and looser than for the long vowel, with the back of the tongue drawn up toward the soft palate.	Round the lips and push them slightly forward.	Keep the teeth close together without touching.	Let the air flow freely through the mouth only; no air escapes through the nose.	The vocal cords vibrate throughout. Keep the vowel short and light.	जीभ कुछ ऊँची और पीछे की ओर रखें।	होंठ गोल करके थोड़ा आगे निकालें।	दाँत पास-पास रखें, पर मिलाएँ नहीं।	हवा केवल मुँह से निकलने दें; नाक से नहीं।	स्वरतंत्रियाँ पूरे समय काँपती हैं। स्वर छोटा और हल्का रखें।	11:Tongue height matters: /ɔ/ has the tongue open-mid.|18:Keep the air out of the nose; nasalizing gives /ʊ̃/.|2:Round the lips; otherwise it drifts to /ɪ/.	0.18,0.56;0.52,0.45;0.64,0.39;0.76,0.45;0.82,0.68	no	rounded	-)CAPT" "\n"
    R"CAPT(5	uː	long,close,back,rounded,vowel	Raise the tongue high toward the roof of the mouth, with the back of the tongue drawn up toward the soft palate.	Round the lips and push them slightly forward.	Keep the teeth close together without touching.	Let the air flow freely through the mouth only; no air escapes through the nose.	The vocal cords vibrate throughout. Hold the vowel about twice as long as its short partner.	जीभ ऊँची और पीछे की ओर रखें।	होंठ गोल करके थोड़ा आगे निकालें।	दाँत पास-पास रखें, पर मिलाएँ नहीं।	हवा केवल मुँह से निकलने दें; नाक से नहीं।	स्वरतंत्रियाँ पूरे समय काँपती हैं। स्वर को लगभग दोगुना लंबा खींचें।	8:Tongue height matters: /oː/ has the tongue close-mid.|9:Tongue height matters: /ɔː/ has the tongue open-mid.|19:Keep the air out of the nose; nasalizing gives /ũː/.	0.18,0.56;0.52,0.42;0.64,0.36;0.76,0.42;0.82,0.68	no	rounded	-)CAPT" "\n"
    R"CAPT(6	eː	long,close_mid,front,unrounded,vowel	Hold the tongue at a mid-high position, with the front of the tongue pushed forward.	Spread the lips slightly, as in a faint smile.	Keep the teeth a finger's width apart.	Let the air flow freely through the mouth only; no air escapes through the nose.	The vocal cords vibrate throughout. Hold the vowel about twice as long as its short partner.	जीभ मध्यम-ऊँची और आगे की ओर रखें।	होंठ हल्के फैलाएँ, जैसे मुस्कुराते समय।	दाँतों के बीच एक उँगली जितनी दूरी रखें।	हवा केवल मुँह से निकलने दें; नाक से नहीं।	स्वरतंत्रियाँ पूरे समय काँपती हैं। स्वर को लगभग दोगुना लंबा खींचें।	3:Tongue height matters: /iː/ has the tongue close.|7:Tongue height matters: /ɛː/ has the tongue open-mid.|20:Keep the air out of the nose; nasalizing gives /ẽː/.	0.18,0.56;0.28,0.49;0.40,0.43;0.52,0.49;0.82,0.68	no	spread	-)CAPT" "\n"
    R"CAPT(7	ɛː	long,open_mid,front,unrounded,vowel	Lower the tongue to a mid-low position, with the front of the tongue pushed forward.	Spread the lips slightly, as in a faint smile.	Keep the teeth a finger's width apart.	Let the air flow freely through the mouth only; no air escapes through the nose.	The vocal cords vibrate throughout. Hold the vowel about twice as long as its short partner.	जीभ मध्यम-नीची और आगे की ओर रखें।	होंठ हल्के फैलाएँ, जैसे मुस्कुराते समय।	दाँतों के बीच एक उँगली जितनी दूरी रखें।	हवा केवल मुँह से निकलने दें; नाक से नहीं।	स्वरतंत्रियाँ पूरे समय काँपती हैं। स्वर को लगभग दोगुना लंबा खींचें।	3:Tongue height matters: /iː/ has the tongue close.|6:Tongue height matters: /eː/ has the tongue close-mid.|21:Keep the air out of the nose; nasalizing gives /ɛ̃ː/.	0.18,0.56;0.28,0.56;0.40,0.50;0.52,0.56;0.82,0.68	no	spread	-)CAPT" "\n"
    R"CAPT(8	oː	long,close_mid,back,rounded,vowel	Hold the tongue at a mid-high position, with the back of the tongue drawn up toward the soft palate.	Round the lips and push them slightly forward.	Keep the teeth a finger's width apart.	Let the air flow freely through the mouth only; no air escapes through the nose.	The vocal cords vibrate throughout. Hold the vowel about twice as long as its short partner.	जीभ मध्यम-ऊँची और पीछे की ओर रखें।	होंठ गोल करके थोड़ा आगे निकालें।	दाँतों के बीच एक उँगली जितनी दूरी रखें।	हवा केवल मुँह से निकलने दें; नाक से नहीं।	स्वरतंत्रियाँ पूरे समय काँपती हैं। स्वर को लगभग दोगुना लंबा खींचें।	5:Tongue height matters: /uː/ has the tongue close.|9:Tongue height matters: /ɔː/ has the tongue open-mid.|22:Keep the air out of the nose; nasalizing gives /õː/.	0.18,0.56;0.52,0.49;0.64,0.43;0.76,0.49;0.82,0.68	no	rounded	-)CAPT" "\n"
    R"CAPT(9	ɔː	long,open_mid,back,rounded,vowel	Lower the tongue to a mid-low position, with the back of the tongue drawn up toward the soft palate.	Round the lips and push them slightly forward.	Keep the teeth a finger's width apart.	Let the air flow freely through the mouth only; no air escapes through the nose.	The vocal cords vibrate throughout. Hold the vowel about twice as long as its short partner.	जीभ मध्यम-नीची और पीछे की ओर रखें।	होंठ गोल करके थोड़ा आगे निकालें।	दाँतों के बीच एक उँगली जितनी दूरी रखें।	हवा केवल मुँह से निकलने दें; नाक से नहीं।	स्वरतंत्रियाँ पूरे समय काँपती हैं। स्वर को लगभग दोगुना लंबा खींचें।	5:Tongue height matters: /uː/ has the tongue close.|8:Tongue height matters: /oː/ has the tongue close-mid.|11:Make the vowel long; the short version is /ɔ/.	0.18,0.56;0.52,0.56;0.64,0.50;0.76,0.56;0.82,0.68	no	rounded	-)CAPT" "\n"
    R"CAPT(10	æ	short,near_open,front,unrounded,vowel	Lower the tongue and jaw almost fully, with the front of the tongue pushed forward.	Spread the lips slightly, as in a faint smile.	Open the teeth wide apart.	Let the air flow freely through the mouth only; no air escapes through the nose.	The vocal cords vibrate throughout. Keep the vowel short and light.	जीभ लगभग पूरी नीची और आगे की ओर रखें।	होंठ हल्के फैलाएँ, जैसे मुस्कुराते समय।	दाँत खुलकर अलग रखें।	हवा केवल मुँह से निकलने दें; नाक से नहीं।	स्वरतंत्रियाँ पूरे समय काँपती हैं। स्वर छोटा और हल्का रखें।	2:Tongue height matters: /ɪ/ has the tongue near-close.|0:Tongue height matters: /ə/ has the tongue mid.|3:Make the vowel short; the long version is /iː/.	0.18,0.56;0.28,0.60;0.40,0.54;0.52,0.60;0.82,0.68	no	spread	-)CAPT" "\n"
    R"CAPT(11	ɔ	short,open_mid,back,rounded,vowel	Lower the tongue to a mid-low position, with the back of the tongue drawn up toward the soft palate.	Round the lips and push them slightly forward.	Keep the teeth a finger's width apart.	Let the air flow freely through the mouth only; no air escapes through the nose.	The vocal cords vibrate throughout. Keep the vowel short and light.	जीभ मध्यम-नीची और पीछे की ओर रखें।	होंठ गोल करके थोड़ा आगे निकालें।	दाँतों के बीच एक उँगली जितनी दूरी रखें।	हवा केवल मुँह से निकलने दें; नाक से नहीं।	स्वरतंत्रियाँ पूरे समय काँपती हैं। स्वर छोटा और हल्का रखें।	4:Tongue height matters: /ʊ/ has the tongue near-close.|9:Make the vowel short; the long version is /ɔː/.|5:Make the vowel short; the long version is /uː/.	0.18,0.56;0.52,0.56;0.64,0.50;0.76,0.56;0.82,0.68	no	rounded	-)CAPT" "\n"
    R"CAPT(12	əɪ	long,mid,central,unrounded,diphthong	Start with the tongue relaxed at mid height, then glide it up and toward the front, as for इ.	Keep the lips relaxed and slightly open.	Keep the teeth a finger's width apart.	Let the air flow freely through the mouth only; no air escapes through the nose.	The vocal cords vibrate throughout. Hold the vowel about twice as long as its short partner.	जीभ को मध्यम ऊँचाई से शुरू करके आगे (इ की ओर) सरकाएँ।	होंठ ढीले और थोड़े खुले रखें।	दाँतों के बीच एक उँगली जितनी दूरी रखें।	हवा केवल मुँह से निकलने दें; नाक से नहीं।	स्वरतंत्रियाँ पूरे समय काँपती हैं। स्वर को लगभग दोगुना लंबा खींचें।	13:Spread the lips; otherwise it drifts to /əʊ/.|0:Do not confuse it with /ə/.|1:Do not confuse it with /aː/.	0.18,0.56;0.40,0.52;0.52,0.46;0.64,0.52;0.82,0.68	no	neutral	-)CAPT" "\n"
    R"CAPT(13	əʊ	long,mid,central,rounded,diphthong	Start with the tongue relaxed at mid height, then glide it up and toward the back, as for उ.	Begin with relaxed lips and round them as the vowel glides.	Keep the teeth a finger's width apart.	Let the air flow freely through the mouth only; no air escapes through the nose.	The vocal cords vibrate throughout. Hold the vowel about twice as long as its short partner.	जीभ को मध्यम ऊँचाई से शुरू करके पीछे (उ की ओर) सरकाएँ।	होंठ ढीले रखकर शुरू करें और ध्वनि के साथ गोल करें।	दाँतों के बीच एक उँगली जितनी दूरी रखें।	हवा केवल मुँह से निकलने दें; नाक से नहीं।	स्वरतंत्रियाँ पूरे समय काँपती हैं। स्वर को लगभग दोगुना लंबा खींचें।	12:Round the lips; otherwise it drifts to /əɪ/.|0:Do not confuse it with /ə/.|1:Do not confuse it with /aː/.	0.18,0.56;0.40,0.52;0.52,0.46;0.64,0.52;0.82,0.68	no	rounded	-)CAPT" "\n"
    R"CAPT(14	ə̃	short,mid,central,unrounded,nasalized,vowel	Keep the tongue relaxed at mid height, with the tongue centred in the mouth.	Keep the lips relaxed and slightly open.	Keep the teeth a finger's width apart.	Lower the soft palate and let the air flow through the mouth and nose at the same time.	The vocal cords vibrate throughout. Keep the vowel short and light.	जीभ मध्यम और बीच में रखें।	होंठ ढीले और थोड़े खुले रखें।	दाँतों के बीच एक उँगली जितनी दूरी रखें।	कोमल तालु नीचे करके हवा मुँह और नाक दोनों से निकलने दें।	स्वरतंत्रियाँ पूरे समय काँपती हैं। स्वर छोटा और हल्का रखें।	0:Let air through the nose; the oral vowel is /ə/.|15:Make the vowel short; the long version is /ãː/.|16:Tongue height matters: /ɪ̃/ has the tongue near-close.	0.18,0.56;0.40,0.52;0.52,0.46;0.64,0.52;0.82,0.68	yes	neutral	-)CAPT" "\n"
    R"CAPT(15	ãː	long,open,central,unrounded,nasalized,vowel	Drop the jaw and keep the tongue low and flat, with the tongue centred in the mouth.	Keep the lips relaxed and slightly open.	Open the teeth wide apart.	Lower the soft palate and let the air flow through the mouth and nose at the same time.	The vocal cords vibrate throughout. Hold the vowel about twice as long as its short partner.	जीभ नीची और बीच में रखें।	होंठ ढीले और थोड़े खुले रखें।	दाँत खुलकर अलग रखें।	कोमल तालु नीचे करके हवा मुँह और नाक दोनों से निकलने दें।	स्वरतंत्रियाँ पूरे समय काँपती हैं। स्वर को लगभग दोगुना लंबा खींचें।	1:Let air through the nose; the oral vowel is /aː/.|14:Make the vowel long; the short version is /ə̃/.|17:Tongue height matters: /ĩː/ has the tongue close.	0.18,0.56;0.40,0.64;0.52,0.58;0.64,0.64;0.82,0.68	yes	neutral	-)CAPT" "\n"
    R"CAPT(16	ɪ̃	short,near_close,front,unrounded,nasalized,vowel	Raise the tongue fairly high, a little lower and looser than for the long vowel, with the front of the tongue pushed forward.	Spread the lips slightly, as in a faint smile.	Keep the teeth close together without touching.	Lower the soft palate and let the air flow through the mouth and nose at the same time.	The vocal cords vibrate throughout. Keep the vowel short and light.	जीभ कुछ ऊँची और आगे की ओर रखें।	होंठ हल्के फैलाएँ, जैसे मुस्कुराते समय।	दाँत पास-पास रखें, पर मिलाएँ नहीं।	कोमल तालु नीचे करके हवा मुँह और नाक दोनों से निकलने दें।	स्वरतंत्रियाँ पूरे समय काँपती हैं। स्वर छोटा और हल्का रखें।	2:Let air through the nose; the oral vowel is /ɪ/.|10:Let air through the nose; the oral vowel is /æ/.|14:Tongue height matters: /ə̃/ has the tongue mid.	0.18,0.56;0.28,0.45;0.40,0.39;0.52,0.45;0.82,0.68	yes	spread	-)CAPT" "\n"
    R"CAPT(17	ĩː	long,close,front,unrounded,nasalized,vowel	Raise the tongue high toward the roof of the mouth, with the front of the tongue pushed forward.	Spread the lips slightly, as in a faint smile.	Keep the teeth close together without touching.	Lower the soft palate and let the air flow through the mouth and nose at the same time.	The vocal cords vibrate throughout. Hold the vowel about twice as long as its short partner.	जीभ ऊँची और आगे की ओर रखें।	होंठ हल्के फैलाएँ, जैसे मुस्कुराते समय।	दाँत पास-पास रखें, पर मिलाएँ नहीं।	कोमल तालु नीचे करके हवा मुँह और नाक दोनों से निकलने दें।	स्वरतंत्रियाँ पूरे समय काँपती हैं। स्वर को लगभग दोगुना लंबा खींचें।	3:Let air through the nose; the oral vowel is /iː/.|20:Tongue height matters: /ẽː/ has the tongue close-mid.|21:Tongue height matters: /ɛ̃ː/ has the tongue open-mid.	0.18,0.56;0.28,0.42;0.40,0.36;0.52,0.42;0.82,0.68	yes	spread	-)CAPT" "\n"
    R"CAPT(18	ʊ̃	short,near_close,back,rounded,nasalized,vowel	Raise the tongue fairly high, a little lower and looser than for the long vowel, with the back of the tongue drawn up toward the soft palate.	Round the lips and push them slightly forward.	Keep the teeth close together without touching.	Lower the soft palate and let the air flow through the mouth and nose at the same time.	The vocal cords vibrate throughout. Keep the vowel short and light.	जीभ कुछ ऊँची और पीछे की ओर रखें।	होंठ गोल करके थोड़ा आगे निकालें।	दाँत पास-पास रखें, पर मिलाएँ नहीं।	कोमल तालु नीचे करके हवा मुँह और नाक दोनों से निकलने दें।	स्वरतंत्रियाँ पूरे समय काँपती हैं। स्वर छोटा और हल्का रखें।	4:Let air through the nose; the oral vowel is /ʊ/.|11:Let air through the nose; the oral vowel is /ɔ/.|16:Round the lips; otherwise it drifts to /ɪ̃/.	0.18,0.56;0.52,0.45;0.64,0.39;0.76,0.45;0.82,0.68	yes	rounded	-)CAPT" "\n"
    R"CAPT(19	ũː	long,close,back,rounded,nasalized,vowel	Raise the tongue high toward the roof of the mouth, with the back of the tongue drawn up toward the soft palate.	Round the lips and push them slightly forward.	Keep the teeth close together without touching.	Lower the soft palate and let the air flow through the mouth and nose at the same time.	The vocal cords vibrate throughout. Hold the vowel about twice as long as its short partner.	जीभ ऊँची और पीछे की ओर रखें।	होंठ गोल करके थोड़ा आगे निकालें।	दाँत पास-पास रखें, पर मिलाएँ नहीं।	कोमल तालु नीचे करके हवा मुँह और नाक दोनों से निकलने दें।	स्वरतंत्रियाँ पूरे समय काँपती हैं। स्वर को लगभग दोगुना लंबा खींचें।	5:Let air through the nose; the oral vowel is /uː/.|22:Tongue height matters: /õː/ has the tongue close-mid.|23:Tongue height matters: /ɔ̃ː/ has the tongue open-mid.	0.18,0.56;0.52,0.42;0.64,0.36;0.76,0.42;0.82,0.68	yes	rounded	-)CAPT" "\n"
    R"CAPT(20	ẽː	long,close_mid,front,unrounded,nasalized,vowel	Hold the tongue at a mid-high position, with the front of the tongue pushed forward.	Spread the lips slightly, as in a faint smile.	Keep the teeth a finger's width apart.	Lower the soft palate and let the air flow through the mouth and nose at the same time.	The vocal cords vibrate throughout. Hold the vowel about twice as long as its short partner.	जीभ मध्यम-ऊँची और आगे की ओर रखें।	होंठ हल्के फैलाएँ, जैसे मुस्कुराते समय।	दाँतों के बीच एक उँगली जितनी दूरी रखें।	कोमल तालु नीचे करके हवा मुँह और नाक दोनों से निकलने दें।	स्वरतंत्रियाँ पूरे समय काँपती हैं। स्वर को लगभग दोगुना लंबा खींचें।	6:Let air through the nose; the oral vowel is /eː/.|17:Tongue height matters: /ĩː/ has the tongue close.|21:Tongue height matters: /ɛ̃ː/ has the tongue open-mid.	0.18,0.56;0.28,0.49;0.40,0.43;0.52,0.49;0.82,0.68	yes	spread	-)CAPT" "\n"
    R"CAPT(21	ɛ̃ː	long,open_mid,front,unrounded,nasalized,vowel	Lower the tongue to a mid-low position, with the front of the tongue pushed forward.	Spread the lips slightly, as in a faint smile.	Keep the teeth a finger's width apart.	Lower the soft palate and let the air flow through the mouth and nose at the same time.	The vocal cords vibrate throughout. Hold the vowel about twice as long as its short partner.	जीभ मध्यम-नीची और आगे की ओर रखें।	होंठ हल्के फैलाएँ, जैसे मुस्कुराते समय।	दाँतों के बीच एक उँगली जितनी दूरी रखें।	कोमल तालु नीचे करके हवा मुँह और नाक दोनों से निकलने दें।	स्वरतंत्रियाँ पूरे समय काँपती हैं। स्वर को लगभग दोगुना लंबा खींचें।	7:Let air through the nose; the oral vowel is /ɛː/.|17:Tongue height matters: /ĩː/ has the tongue close.|20:Tongue height matters: /ẽː/ has the tongue close-mid.	0.18,0.56;0.28,0.56;0.40,0.50;0.52,0.56;0.82,0.68	yes	spread	-)CAPT" "\n"
    R"CAPT(22	õː	long,close_mid,back,rounded,nasalized,vowel	Hold the tongue at a mid-high position, with the back of the tongue drawn up toward the soft palate.	Round the lips and push them slightly forward.	Keep the teeth a finger's width apart.	Lower the soft palate and let the air flow through the mouth and nose at the same time.	The vocal cords vibrate throughout. Hold the vowel about twice as long as its short partner.	जीभ मध्यम-ऊँची और पीछे की ओर रखें।	होंठ गोल करके थोड़ा आगे निकालें।	दाँतों के बीच एक उँगली जितनी दूरी रखें।	कोमल तालु नीचे करके हवा मुँह और नाक दोनों से निकलने दें।	स्वरतंत्रियाँ पूरे समय काँपती हैं। स्वर को लगभग दोगुना लंबा खींचें।	8:Let air through the nose; the oral vowel is /oː/.|19:Tongue height matters: /ũː/ has the tongue close.|23:Tongue height matters: /ɔ̃ː/ has the tongue open-mid.	0.18,0.56;0.52,0.49;0.64,0.43;0.76,0.49;0.82,0.68	yes	rounded	-)CAPT" "\n"
    R"CAPT(23	ɔ̃ː	long,open_mid,back,rounded,nasalized,vowel	Lower the tongue to a mid-low position, with the back of the tongue drawn up toward the soft palate.	Round the lips and push them slightly forward.	Keep the teeth a finger's width apart.	Lower the soft palate and let the air flow through the mouth and nose at the same time.	The vocal cords vibrate throughout. Hold the vowel about twice as long as its short partner.	जीभ मध्यम-नीची और पीछे की ओर रखें।	होंठ गोल करके थोड़ा आगे निकालें।	दाँतों के बीच एक उँगली जितनी दूरी रखें।	कोमल तालु नीचे करके हवा मुँह और नाक दोनों से निकलने दें।	स्वरतंत्रियाँ पूरे समय काँपती हैं। स्वर को लगभग दोगुना लंबा खींचें।	9:Let air through the nose; the oral vowel is /ɔː/.|19:Tongue height matters: /ũː/ has the tongue close.|22:Tongue height matters: /õː/ has the tongue close-mid.	0.18,0.56;0.52,0.56;0.64,0.50;0.76,0.56;0.82,0.68	yes	rounded	-)CAPT" "\n"
    R"CAPT(24	k	unvoiced,velar,plosive	Raise the back of the tongue against the soft palate while the tip rests behind the lower teeth.	Keep the lips relaxed and slightly open.	Keep the teeth slightly apart; the tongue does not touch them.	Block the air completely, then release it in one clean burst with no extra puff of breath afterwards.	The vocal cords stay still: there is no buzz in the throat.	जीभ का पिछला भाग कोमल तालु से लगाएँ।	होंठ ढीले और थोड़े खुले रखें।	दाँत थोड़े खुले रखें; जीभ उन्हें नहीं छूती।	हवा पूरी तरह रोकें, फिर एक झटके में छोड़ें। बाद में अतिरिक्त साँस न छोड़ें।	स्वरतंत्रियाँ स्थिर रहती हैं: गले में कोई कंपन नहीं।	25:Hold back the puff of breath; with it the sound becomes /kʰ/.|26:Keep the vocal cords still; voicing it gives /g/.|27:Keep the vocal cords still; voicing it gives /gʱ/.	0.18,0.58;0.34,0.54;0.52,0.44;0.64,0.36;0.80,0.64	no	neutral	0.64,0.33)CAPT" "\n"
    R"CAPT(25	kʰ	unvoiced,velar,aspirated,plosive	Raise the back of the tongue against the soft palate while the tip rests behind the lower teeth.	Keep the lips relaxed and slightly open.	Keep the teeth slightly apart; the tongue does not touch them.	Block the air completely, then release it in one clean burst followed by a strong puff of breath; a hand held before the mouth should feel it.	The vocal cords stay still: there is no buzz in the throat.	जीभ का पिछला भाग कोमल तालु से लगाएँ।	होंठ ढीले और थोड़े खुले रखें।	दाँत थोड़े खुले रखें; जीभ उन्हें नहीं छूती।	हवा पूरी तरह रोकें, फिर एक झटके में छोड़ें। साथ में ज़ोर की साँस (हकार) छोड़ें।	स्वरतंत्रियाँ स्थिर रहती हैं: गले में कोई कंपन नहीं।	24:Add the puff of breath; without it the sound becomes /k/.|27:Keep the vocal cords still; voicing it gives /gʱ/.|26:Keep the vocal cords still; voicing it gives /g/.	0.18,0.58;0.34,0.54;0.52,0.44;0.64,0.36;0.80,0.64	no	neutral	0.64,0.33)CAPT" "\n"
    R"CAPT(26	g	voiced,velar,plosive	Raise the back of the tongue against the soft palate while the tip rests behind the lower teeth.	Keep the lips relaxed and slightly open.	Keep the teeth slightly apart; the tongue does not touch them.	Block the air completely, then release it in one clean burst with no extra puff of breath afterwards.	The vocal cords vibrate: put a finger on the throat and feel the buzz.	जीभ का पिछला भाग कोमल तालु से लगाएँ।	होंठ ढीले और थोड़े खुले रखें।	दाँत थोड़े खुले रखें; जीभ उन्हें नहीं छूती।	हवा पूरी तरह रोकें, फिर एक झटके में छोड़ें। बाद में अतिरिक्त साँस न छोड़ें।	स्वरतंत्रियाँ काँपती हैं: गले पर उँगली रखकर कंपन महसूस करें।	24:Keep the vocal cords buzzing; without voice it becomes /k/.|27:Hold back the puff of breath; with it the sound becomes /gʱ/.|25:Keep the vocal cords buzzing; without voice it becomes /kʰ/.	0.18,0.58;0.34,0.54;0.52,0.44;0.64,0.36;0.80,0.64	no	neutral	0.64,0.33)CAPT" "\n"
    R"CAPT(27	gʱ	voiced,velar,aspirated,plosive	Raise the back of the tongue against the soft palate while the tip rests behind the lower teeth.	Keep the lips relaxed and slightly open.	Keep the teeth slightly apart; the tongue does not touch them.	Block the air completely, then release it in one clean burst followed by a strong puff of breath; a hand held before the mouth should feel it.	The vocal cords vibrate and stay buzzing through a breathy release.	जीभ का पिछला भाग कोमल तालु से लगाएँ।	होंठ ढीले और थोड़े खुले रखें।	दाँत थोड़े खुले रखें; जीभ उन्हें नहीं छूती।	हवा पूरी तरह रोकें, फिर एक झटके में छोड़ें। साथ में ज़ोर की साँस (हकार) छोड़ें।	स्वरतंत्रियाँ काँपती हैं और साँस छोड़ते समय भी कंपन बना रहता है।	25:Keep the vocal cords buzzing; without voice it becomes /kʰ/.|26:Add the puff of breath; without it the sound becomes /g/.|24:Keep the vocal cords buzzing; without voice it becomes /k/.	0.18,0.58;0.34,0.54;0.52,0.44;0.64,0.36;0.80,0.64	no	neutral	0.64,0.33)CAPT" "\n"
    R"CAPT(28	ŋ	voiced,velar,nasal	Raise the back of the tongue against the soft palate while the tip rests behind the lower teeth.	Keep the lips relaxed and slightly open.	Keep the teeth slightly apart; the tongue does not touch them.	Close off the mouth and let all the air flow out through the nose.	The vocal cords vibrate: put a finger on the throat and feel the buzz.	जीभ का पिछला भाग कोमल तालु से लगाएँ।	होंठ ढीले और थोड़े खुले रखें।	दाँत थोड़े खुले रखें; जीभ उन्हें नहीं छूती।	मुँह का रास्ता बंद करके सारी हवा नाक से निकलने दें।	स्वरतंत्रियाँ काँपती हैं: गले पर उँगली रखकर कंपन महसूस करें।	26:Make it a nasal, not a plosive (/g/).|62:Make it a nasal, not a fricative (/ɣ/).|33:Keep the contact velar; moving it palatal gives /ɲ/.	0.18,0.58;0.34,0.54;0.52,0.44;0.64,0.36;0.80,0.64	yes	neutral	0.64,0.33)CAPT" "\n"
    R"CAPT(29	tʃ	unvoiced,palatal,affricate	Press the front of the tongue up against the hard palate, just behind the gum ridge.	Keep the lips relaxed and slightly open.	Keep the teeth slightly apart; the tongue does not touch them.	Block the air, then release it slowly through a narrow gap so the stop slides into a hiss with no extra puff of breath afterwards.	The vocal cords stay still: there is no buzz in the throat.	जीभ का अगला भाग कठोर तालु से लगाएँ।	होंठ ढीले और थोड़े खुले रखें।	दाँत थोड़े खुले रखें; जीभ उन्हें नहीं छूती।	हवा रोकें, फिर संकरे रास्ते से धीरे-धीरे छोड़ें। बाद में अतिरिक्त साँस न छोड़ें।	स्वरतंत्रियाँ स्थिर रहती हैं: गले में कोई कंपन नहीं।	30:Hold back the puff of breath; with it the sound becomes /tʃʰ/.|31:Keep the vocal cords still; voicing it gives /dʒ/.|32:Keep the vocal cords still; voicing it gives /dʒʱ/.	0.18,0.52;0.32,0.40;0.46,0.34;0.62,0.46;0.80,0.68	no	neutral	0.44,0.31)CAPT" "\n"
    R"CAPT(30	tʃʰ	unvoiced,palatal,aspirated,affricate	Press the front of the tongue up against the hard palate, just behind the gum ridge.	Keep the lips relaxed and slightly open.	Keep the teeth slightly apart; the tongue does not touch them.	Block the air, then release it slowly through a narrow gap so the stop slides into a hiss followed by a strong puff of breath; a hand held before the mouth should feel it.	The vocal cords stay still: there is no buzz in the throat.	जीभ का अगला भाग कठोर तालु से लगाएँ।	होंठ ढीले और थोड़े खुले रखें।	दाँत थोड़े खुले रखें; जीभ उन्हें नहीं छूती।	हवा रोकें, फिर संकरे रास्ते से धीरे-धीरे छोड़ें। साथ में ज़ोर की साँस (हकार) छोड़ें।	स्वरतंत्रियाँ स्थिर रहती हैं: गले में कोई कंपन नहीं।	29:Add the puff of breath; without it the sound becomes /tʃ/.|32:Keep the vocal cords still; voicing it gives /dʒʱ/.|31:Keep the vocal cords still; voicing it gives /dʒ/.	0.18,0.52;0.32,0.40;0.46,0.34;0.62,0.46;0.80,0.68	no	neutral	0.44,0.31)CAPT" "\n"
    R"CAPT(31	dʒ	voiced,palatal,affricate	Press the front of the tongue up against the hard palate, just behind the gum ridge.	Keep the lips relaxed and slightly open.	Keep the teeth slightly apart; the tongue does not touch them.	Block the air, then release it slowly through a narrow gap so the stop slides into a hiss with no extra puff of breath afterwards.	The vocal cords vibrate: put a finger on the throat and feel the buzz.	जीभ का अगला भाग कठोर तालु से लगाएँ।	होंठ ढीले और थोड़े खुले रखें।	दाँत थोड़े खुले रखें; जीभ उन्हें नहीं छूती।	हवा रोकें, फिर संकरे रास्ते से धीरे-धीरे छोड़ें। बाद में अतिरिक्त साँस न छोड़ें।	स्वरतंत्रियाँ काँपती हैं: गले पर उँगली रखकर कंपन महसूस करें।	29:Keep the vocal cords buzzing; without voice it becomes /tʃ/.|32:Hold back the puff of breath; with it the sound becomes /dʒʱ/.|30:Keep the vocal cords buzzing; without voice it becomes /tʃʰ/.	0.18,0.52;0.32,0.40;0.46,0.34;0.62,0.46;0.80,0.68	no	neutral	0.44,0.31)CAPT" "\n"
    R"CAPT(32	dʒʱ	voiced,palatal,aspirated,affricate	Press the front of the tongue up against the hard palate, just behind the gum ridge.	Keep the lips relaxed and slightly open.	Keep the teeth slightly apart; the tongue does not touch them.	Block the air, then release it slowly through a narrow gap so the stop slides into a hiss followed by a strong puff of breath; a hand held before the mouth should feel it.	The vocal cords vibrate and stay buzzing through a breathy release.	जीभ का अगला भाग कठोर तालु से लगाएँ।	होंठ ढीले और थोड़े खुले रखें।	दाँत थोड़े खुले रखें; जीभ उन्हें नहीं छूती।	हवा रोकें, फिर संकरे रास्ते से धीरे-धीरे छोड़ें। साथ में ज़ोर की साँस (हकार) छोड़ें।	स्वरतंत्रियाँ काँपती हैं और साँस छोड़ते समय भी कंपन बना रहता है।	30:Keep the vocal cords buzzing; without voice it becomes /tʃʰ/.|31:Add the puff of breath; without it the sound becomes /dʒ/.|29:Keep the vocal cords buzzing; without voice it becomes /tʃ/.	0.18,0.52;0.32,0.40;0.46,0.34;0.62,0.46;0.80,0.68	no	neutral	0.44,0.31)CAPT" "\n"
    R"CAPT(33	ɲ	voiced,palatal,nasal	Press the front of the tongue up against the hard palate, just behind the gum ridge.	Keep the lips relaxed and slightly open.	Keep the teeth slightly apart; the tongue does not touch them.	Close off the mouth and let all the air flow out through the nose.	The vocal cords vibrate: put a finger on the throat and feel the buzz.	जीभ का अगला भाग कठोर तालु से लगाएँ।	होंठ ढीले और थोड़े खुले रखें।	दाँत थोड़े खुले रखें; जीभ उन्हें नहीं छूती।	मुँह का रास्ता बंद करके सारी हवा नाक से निकलने दें।	स्वरतंत्रियाँ काँपती हैं: गले पर उँगली रखकर कंपन महसूस करें।	31:Make it a nasal, not a affricate (/dʒ/).|49:Make it a nasal, not a approximant (/j/).|28:Keep the contact palatal; moving it velar gives /ŋ/.	0.18,0.52;0.32,0.40;0.46,0.34;0.62,0.46;0.80,0.68	yes	neutral	0.44,0.31)CAPT" "\n"
    R"CAPT(34	ʈ	unvoiced,retroflex,plosive	Lift and curl the tongue tip back so its underside meets the roof of the mouth behind the gum ridge.	Keep the lips relaxed and slightly open.	The tongue stays well clear of the teeth; contact is far behind them.	Block the air completely, then release it in one clean burst with no extra puff of breath afterwards.	The vocal cords stay still: there is no buzz in the throat.	जीभ की नोक को पीछे की ओर मोड़कर तालु से लगाएँ।	होंठ ढीले और थोड़े खुले रखें।	जीभ दाँतों से दूर रहती है; संपर्क उनसे काफ़ी पीछे होता है।	हवा पूरी तरह रोकें, फिर एक झटके में छोड़ें। बाद में अतिरिक्त साँस न छोड़ें।	स्वरतंत्रियाँ स्थिर रहती हैं: गले में कोई कंपन नहीं।	35:Hold back the puff of breath; with it the sound becomes /ʈʰ/.|36:Keep the vocal cords still; voicing it gives /ɖ/.|37:Keep the vocal cords still; voicing it gives /ɖʱ/.	0.26,0.34;0.30,0.46;0.46,0.52;0.63,0.56;0.80,0.70	no	neutral	0.28,0.31)CAPT" "\n"
    R"CAPT(35	ʈʰ	unvoiced,retroflex,aspirated,plosive	Lift and curl the tongue tip back so its underside meets the roof of the mouth behind the gum ridge.	Keep the lips relaxed and slightly open.	The tongue stays well clear of the teeth; contact is far behind them.	Block the air completely, then release it in one clean burst followed by a strong puff of breath; a hand held before the mouth should feel it.	The vocal cords stay still: there is no buzz in the throat.	जीभ की नोक को पीछे की ओर मोड़कर तालु से लगाएँ।	होंठ ढीले और थोड़े खुले रखें।	जीभ दाँतों से दूर रहती है; संपर्क उनसे काफ़ी पीछे होता है।	हवा पूरी तरह रोकें, फिर एक झटके में छोड़ें। साथ में ज़ोर की साँस (हकार) छोड़ें।	स्वरतंत्रियाँ स्थिर रहती हैं: गले में कोई कंपन नहीं।	34:Add the puff of breath; without it the sound becomes /ʈ/.|37:Keep the vocal cords still; voicing it gives /ɖʱ/.|36:Keep the vocal cords still; voicing it gives /ɖ/.	0.26,0.34;0.30,0.46;0.46,0.52;0.63,0.56;0.80,0.70	no	neutral	0.28,0.31)CAPT" "\n"
    R"CAPT(36	ɖ	voiced,retroflex,plosive	Lift and curl the tongue tip back so its underside meets the roof of the mouth behind the gum ridge.	Keep the lips relaxed and slightly open.	The tongue stays well clear of the teeth; contact is far behind them.	Block the air completely, then release it in one clean burst with no extra puff of breath afterwards.	The vocal cords vibrate: put a finger on the throat and feel the buzz.	जीभ की नोक को पीछे की ओर मोड़कर तालु से लगाएँ।	होंठ ढीले और थोड़े खुले रखें।	जीभ दाँतों से दूर रहती है; संपर्क उनसे काफ़ी पीछे होता है।	हवा पूरी तरह रोकें, फिर एक झटके में छोड़ें। बाद में अतिरिक्त साँस न छोड़ें।	स्वरतंत्रियाँ काँपती हैं: गले पर उँगली रखकर कंपन महसूस करें।	34:Keep the vocal cords buzzing; without voice it becomes /ʈ/.|37:Hold back the puff of breath; with it the sound becomes /ɖʱ/.|35:Keep the vocal cords buzzing; without voice it becomes /ʈʰ/.	0.26,0.34;0.30,0.46;0.46,0.52;0.63,0.56;0.80,0.70	no	neutral	0.28,0.31)CAPT" "\n"
    R"CAPT(37	ɖʱ	voiced,retroflex,aspirated,plosive	Lift and curl the tongue tip back so its underside meets the roof of the mouth behind the gum ridge.	Keep the lips relaxed and slightly open.	The tongue stays well clear of the teeth; contact is far behind them.	Block the air completely, then release it in one clean burst followed by a strong puff of breath; a hand held before the mouth should feel it.	The vocal cords vibrate and stay buzzing through a breathy release.	जीभ की नोक को पीछे की ओर मोड़कर तालु से लगाएँ।	होंठ ढीले और थोड़े खुले रखें।	जीभ दाँतों से दूर रहती है; संपर्क उनसे काफ़ी पीछे होता है।	हवा पूरी तरह रोकें, फिर एक झटके में छोड़ें। साथ में ज़ोर की साँस (हकार) छोड़ें।	स्वरतंत्रियाँ काँपती हैं और साँस छोड़ते समय भी कंपन बना रहता है।	35:Keep the vocal cords buzzing; without voice it becomes /ʈʰ/.|36:Add the puff of breath; without it the sound becomes /ɖ/.|34:Keep the vocal cords buzzing; without voice it becomes /ʈ/.	0.26,0.34;0.30,0.46;0.46,0.52;0.63,0.56;0.80,0.70	no	neutral	0.28,0.31)CAPT" "\n"
    R"CAPT(38	ɳ	voiced,retroflex,nasal	Lift and curl the tongue tip back so its underside meets the roof of the mouth behind the gum ridge.	Keep the lips relaxed and slightly open.	The tongue stays well clear of the teeth; contact is far behind them.	Close off the mouth and let all the air flow out through the nose.	The vocal cords vibrate: put a finger on the throat and feel the buzz.	जीभ की नोक को पीछे की ओर मोड़कर तालु से लगाएँ।	होंठ ढीले और थोड़े खुले रखें।	जीभ दाँतों से दूर रहती है; संपर्क उनसे काफ़ी पीछे होता है।	मुँह का रास्ता बंद करके सारी हवा नाक से निकलने दें।	स्वरतंत्रियाँ काँपती हैं: गले पर उँगली रखकर कंपन महसूस करें।	36:Make it a nasal, not a plosive (/ɖ/).|53:Make it a nasal, not a flap (/ɽ/).|28:Keep the contact retroflex; moving it velar gives /ŋ/.	0.26,0.34;0.30,0.46;0.46,0.52;0.63,0.56;0.80,0.70	yes	neutral	0.28,0.31)CAPT" "\n"
    R"CAPT(39	t̪	unvoiced,dental,plosive	Press the tongue tip flat against the back of the upper front teeth.	Keep the lips relaxed and slightly open.	The tongue tip touches the back of the upper front teeth, not the gum ridge above them.	Block the air completely, then release it in one clean burst with no extra puff of breath afterwards.	The vocal cords stay still: there is no buzz in the throat.	जीभ की नोक ऊपर के दाँतों के पीछे दबाएँ।	होंठ ढीले और थोड़े खुले रखें।	जीभ की नोक ऊपर के दाँतों के पीछे लगती है, मसूड़ों पर नहीं।	हवा पूरी तरह रोकें, फिर एक झटके में छोड़ें। बाद में अतिरिक्त साँस न छोड़ें।	स्वरतंत्रियाँ स्थिर रहती हैं: गले में कोई कंपन नहीं।	40:Hold back the puff of breath; with it the sound becomes /t̪ʰ/.|41:Keep the vocal cords still; voicing it gives /d̪/.|42:Keep the vocal cords still; voicing it gives /d̪ʱ/.	0.12,0.44;0.26,0.48;0.44,0.50;0.62,0.55;0.80,0.70	no	neutral	0.12,0.42)CAPT" "\n"
    R"CAPT(40	t̪ʰ	unvoiced,dental,aspirated,plosive	Press the tongue tip flat against the back of the upper front teeth.	Keep the lips relaxed and slightly open.	The tongue tip touches the back of the upper front teeth, not the gum ridge above them.	Block the air completely, then release it in one clean burst followed by a strong puff of breath; a hand held before the mouth should feel it.	The vocal cords stay still: there is no buzz in the throat.	जीभ की नोक ऊपर के दाँतों के पीछे दबाएँ।	होंठ ढीले और थोड़े खुले रखें।	जीभ की नोक ऊपर के दाँतों के पीछे लगती है, मसूड़ों पर नहीं।	हवा पूरी तरह रोकें, फिर एक झटके में छोड़ें। साथ में ज़ोर की साँस (हकार) छोड़ें।	स्वरतंत्रियाँ स्थिर रहती हैं: गले में कोई कंपन नहीं।	39:Add the puff of breath; without it the sound becomes /t̪/.|42:Keep the vocal cords still; voicing it gives /d̪ʱ/.|41:Keep the vocal cords still; voicing it gives /d̪/.	0.12,0.44;0.26,0.48;0.44,0.50;0.62,0.55;0.80,0.70	no	neutral	0.12,0.42)CAPT" "\n"
    R"CAPT(41	d̪	voiced,dental,plosive	Press the tongue tip flat against the back of the upper front teeth.	Keep the lips relaxed and slightly open.	The tongue tip touches the back of the upper front teeth, not the gum ridge above them.	Block the air completely, then release it in one clean burst with no extra puff of breath afterwards.	The vocal cords vibrate: put a finger on the throat and feel the buzz.	जीभ की नोक ऊपर के दाँतों के पीछे दबाएँ।	होंठ ढीले और थोड़े खुले रखें।	जीभ की नोक ऊपर के दाँतों के पीछे लगती है, मसूड़ों पर नहीं।	हवा पूरी तरह रोकें, फिर एक झटके में छोड़ें। बाद में अतिरिक्त साँस न छोड़ें।	स्वरतंत्रियाँ काँपती हैं: गले पर उँगली रखकर कंपन महसूस करें।	39:Keep the vocal cords buzzing; without voice it becomes /t̪/.|42:Hold back the puff of breath; with it the sound becomes /d̪ʱ/.|40:Keep the vocal cords buzzing; without voice it becomes /t̪ʰ/.	0.12,0.44;0.26,0.48;0.44,0.50;0.62,0.55;0.80,0.70	no	neutral	0.12,0.42)CAPT" "\n"
    R"CAPT(42	d̪ʱ	voiced,dental,aspirated,plosive	Press the tongue tip flat against the back of the upper front teeth.	Keep the lips relaxed and slightly open.	The tongue tip touches the back of the upper front teeth, not the gum ridge above them.	Block the air completely, then release it in one clean burst followed by a strong puff of breath; a hand held before the mouth should feel it.	The vocal cords vibrate and stay buzzing through a breathy release.	जीभ की नोक ऊपर के दाँतों के पीछे दबाएँ।	होंठ ढीले और थोड़े खुले रखें।	जीभ की नोक ऊपर के दाँतों के पीछे लगती है, मसूड़ों पर नहीं।	हवा पूरी तरह रोकें, फिर एक झटके में छोड़ें। साथ में ज़ोर की साँस (हकार) छोड़ें।	स्वरतंत्रियाँ काँपती हैं और साँस छोड़ते समय भी कंपन बना रहता है।	40:Keep the vocal cords buzzing; without voice it becomes /t̪ʰ/.|41:Add the puff of breath; without it the sound becomes /d̪/.|39:Keep the vocal cords buzzing; without voice it becomes /t̪/.	0.12,0.44;0.26,0.48;0.44,0.50;0.62,0.55;0.80,0.70	no	neutral	0.12,0.42)CAPT" "\n"
    R"CAPT(43	n	voiced,dental,nasal	Press the tongue tip flat against the back of the upper front teeth.	Keep the lips relaxed and slightly open.	The tongue tip touches the back of the upper front teeth, not the gum ridge above them.	Close off the mouth and let all the air flow out through the nose.	The vocal cords vibrate: put a finger on the throat and feel the buzz.	जीभ की नोक ऊपर के दाँतों के पीछे दबाएँ।	होंठ ढीले और थोड़े खुले रखें।	जीभ की नोक ऊपर के दाँतों के पीछे लगती है, मसूड़ों पर नहीं।	मुँह का रास्ता बंद करके सारी हवा नाक से निकलने दें।	स्वरतंत्रियाँ काँपती हैं: गले पर उँगली रखकर कंपन महसूस करें।	41:Make it a nasal, not a plosive (/d̪/).|28:Keep the contact dental; moving it velar gives /ŋ/.|33:Keep the contact dental; moving it palatal gives /ɲ/.	0.12,0.44;0.26,0.48;0.44,0.50;0.62,0.55;0.80,0.70	yes	neutral	0.12,0.42)CAPT" "\n"
    R"CAPT(44	p	unvoiced,labial,plosive	Keep the tongue low and relaxed; the lips do the work.	Press both lips together, then open them sharply to release the sound.	Keep the teeth slightly apart; the tongue does not touch them.	Block the air completely, then release it in one clean burst with no extra puff of breath afterwards.	The vocal cords stay still: there is no buzz in the throat.	जीभ को ढीला और नीचे रखें; काम होंठ करते हैं।	दोनों होंठ मिलाएँ, फिर झटके से खोलें।	दाँत थोड़े खुले रखें; जीभ उन्हें नहीं छूती।	हवा पूरी तरह रोकें, फिर एक झटके में छोड़ें। बाद में अतिरिक्त साँस न छोड़ें।	स्वरतंत्रियाँ स्थिर रहती हैं: गले में कोई कंपन नहीं।	45:Hold back the puff of breath; with it the sound becomes /pʰ/.|46:Keep the vocal cords still; voicing it gives /b/.|47:Keep the vocal cords still; voicing it gives /bʱ/.	0.18,0.58;0.32,0.52;0.48,0.50;0.64,0.55;0.80,0.70	no	closed	0.05,0.50)CAPT" "\n"
    R"CAPT(45	pʰ	unvoiced,labial,aspirated,plosive	Keep the tongue low and relaxed; the lips do the work.	Press both lips together, then open them sharply to release the sound.	Keep the teeth slightly apart; the tongue does not touch them.	Block the air completely, then release it in one clean burst followed by a strong puff of breath; a hand held before the mouth should feel it.	The vocal cords stay still: there is no buzz in the throat.	जीभ को ढीला और नीचे रखें; काम होंठ करते हैं।	दोनों होंठ मिलाएँ, फिर झटके से खोलें।	दाँत थोड़े खुले रखें; जीभ उन्हें नहीं छूती।	हवा पूरी तरह रोकें, फिर एक झटके में छोड़ें। साथ में ज़ोर की साँस (हकार) छोड़ें।	स्वरतंत्रियाँ स्थिर रहती हैं: गले में कोई कंपन नहीं।	44:Add the puff of breath; without it the sound becomes /p/.|47:Keep the vocal cords still; voicing it gives /bʱ/.|46:Keep the vocal cords still; voicing it gives /b/.	0.18,0.58;0.32,0.52;0.48,0.50;0.64,0.55;0.80,0.70	no	closed	0.05,0.50)CAPT" "\n"
    R"CAPT(46	b	voiced,labial,plosive	Keep the tongue low and relaxed; the lips do the work.	Press both lips together, then open them sharply to release the sound.	Keep the teeth slightly apart; the tongue does not touch them.	Block the air completely, then release it in one clean burst with no extra puff of breath afterwards.	The vocal cords vibrate: put a finger on the throat and feel the buzz.	जीभ को ढीला और नीचे रखें; काम होंठ करते हैं।	दोनों होंठ मिलाएँ, फिर झटके से खोलें।	दाँत थोड़े खुले रखें; जीभ उन्हें नहीं छूती।	हवा पूरी तरह रोकें, फिर एक झटके में छोड़ें। बाद में अतिरिक्त साँस न छोड़ें।	स्वरतंत्रियाँ काँपती हैं: गले पर उँगली रखकर कंपन महसूस करें।	44:Keep the vocal cords buzzing; without voice it becomes /p/.|47:Hold back the puff of breath; with it the sound becomes /bʱ/.|45:Keep the vocal cords buzzing; without voice it becomes /pʰ/.	0.18,0.58;0.32,0.52;0.48,0.50;0.64,0.55;0.80,0.70	no	closed	0.05,0.50)CAPT" "\n"
    R"CAPT(47	bʱ	voiced,labial,aspirated,plosive	Keep the tongue low and relaxed; the lips do the work.	Press both lips together, then open them sharply to release the sound.	Keep the teeth slightly apart; the tongue does not touch them.	Block the air completely, then release it in one clean burst followed by a strong puff of breath; a hand held before the mouth should feel it.	The vocal cords vibrate and stay buzzing through a breathy release.	जीभ को ढीला और नीचे रखें; काम होंठ करते हैं।	दोनों होंठ मिलाएँ, फिर झटके से खोलें।	दाँत थोड़े खुले रखें; जीभ उन्हें नहीं छूती।	हवा पूरी तरह रोकें, फिर एक झटके में छोड़ें। साथ में ज़ोर की साँस (हकार) छोड़ें।	स्वरतंत्रियाँ काँपती हैं और साँस छोड़ते समय भी कंपन बना रहता है।	45:Keep the vocal cords buzzing; without voice it becomes /pʰ/.|46:Add the puff of breath; without it the sound becomes /b/.|44:Keep the vocal cords buzzing; without voice it becomes /p/.	0.18,0.58;0.32,0.52;0.48,0.50;0.64,0.55;0.80,0.70	no	closed	0.05,0.50)CAPT" "\n"
    R"CAPT(48	m	voiced,labial,nasal	Keep the tongue low and relaxed; the lips do the work.	Press both lips together and keep them closed while the sound continues.	Keep the teeth slightly apart; the tongue does not touch them.	Close off the mouth and let all the air flow out through the nose.	The vocal cords vibrate: put a finger on the throat and feel the buzz.	जीभ को ढीला और नीचे रखें; काम होंठ करते हैं।	दोनों होंठ मिलाएँ और ध्वनि के दौरान बंद रखें।	दाँत थोड़े खुले रखें; जीभ उन्हें नहीं छूती।	मुँह का रास्ता बंद करके सारी हवा नाक से निकलने दें।	स्वरतंत्रियाँ काँपती हैं: गले पर उँगली रखकर कंपन महसूस करें।	46:Make it a nasal, not a plosive (/b/).|28:Keep the contact labial; moving it velar gives /ŋ/.|33:Keep the contact labial; moving it palatal gives /ɲ/.	0.18,0.58;0.32,0.52;0.48,0.50;0.64,0.55;0.80,0.70	yes	closed	0.05,0.50)CAPT" "\n"
    R"CAPT(49	j	voiced,palatal,approximant	Raise the front of the tongue toward the hard palate without touching it, as for a quick ई.	Keep the lips relaxed and slightly open.	Keep the teeth slightly apart; the tongue does not touch them.	Let the air flow smoothly past the tongue without any friction.	The vocal cords vibrate: put a finger on the throat and feel the buzz.	जीभ का अगला भाग कठोर तालु से लगाएँ।	होंठ ढीले और थोड़े खुले रखें।	दाँत थोड़े खुले रखें; जीभ उन्हें नहीं छूती।	हवा बिना घर्षण के सहज बहने दें।	स्वरतंत्रियाँ काँपती हैं: गले पर उँगली रखकर कंपन महसूस करें।	31:Make it a approximant, not a affricate (/dʒ/).|33:Make it a approximant, not a nasal (/ɲ/).|50:Keep the contact palatal; moving it alveolar gives /l/.	0.18,0.52;0.32,0.40;0.46,0.34;0.62,0.46;0.80,0.68	no	neutral	0.44,0.34)CAPT" "\n"
    R"CAPT(50	l	voiced,alveolar,approximant	Rest the tongue tip on the gum ridge and let the air pass along both sides of the tongue.	Keep the lips relaxed and slightly open.	Keep the teeth slightly apart; the tongue does not touch them.	Let the air flow smoothly past the tongue without any friction.	The vocal cords vibrate: put a finger on the throat and feel the buzz.	जीभ की नोक मसूड़ों के उभार से लगाएँ।	होंठ ढीले और थोड़े खुले रखें।	दाँत थोड़े खुले रखें; जीभ उन्हें नहीं छूती।	हवा बिना घर्षण के सहज बहने दें।	स्वरतंत्रियाँ काँपती हैं: गले पर उँगली रखकर कंपन महसूस करें।	52:Make it a approximant, not a flap (/r/).|60:Make it a approximant, not a fricative (/z/).|49:Keep the contact alveolar; moving it palatal gives /j/.	0.16,0.36;0.28,0.44;0.46,0.50;0.63,0.55;0.80,0.70	no	neutral	0.18,0.36)CAPT" "\n"
    R"CAPT(51	ʋ	voiced,labiodental,approximant	Keep the tongue low and relaxed; the lower lip and upper teeth do the work.	Rest the lower lip lightly against the edge of the upper front teeth.	The upper front teeth rest on the inside of the lower lip.	Let the air flow smoothly past the tongue without any friction.	The vocal cords vibrate: put a finger on the throat and feel the buzz.	जीभ ढीली रखें; निचला होंठ ऊपर के दाँतों से लगाएँ।	निचला होंठ ऊपर के दाँतों के किनारे से हल्का सटाएँ।	ऊपर के दाँत निचले होंठ के भीतरी भाग पर टिके रहते हैं।	हवा बिना घर्षण के सहज बहने दें।	स्वरतंत्रियाँ काँपती हैं: गले पर उँगली रखकर कंपन महसूस करें।	49:Keep the contact labiodental; moving it palatal gives /j/.|50:Keep the contact labiodental; moving it alveolar gives /l/.|59:Make it a approximant, not a fricative (/f/).	0.18,0.58;0.32,0.52;0.48,0.50;0.64,0.55;0.80,0.70	no	neutral	0.08,0.47)CAPT" "\n"
    R"CAPT(52	r	voiced,alveolar,flap	Tap the tongue tip once, quickly, against the gum ridge behind the upper teeth.	Keep the lips relaxed and slightly open.	Keep the teeth slightly apart; the tongue does not touch them.	Let the air flow through a single quick tap; do not trill.	The vocal cords vibrate: put a finger on the throat and feel the buzz.	जीभ की नोक मसूड़ों के उभार से लगाएँ।	होंठ ढीले और थोड़े खुले रखें।	दाँत थोड़े खुले रखें; जीभ उन्हें नहीं छूती।	जीभ से केवल एक बार तेज़ी से टकराएँ; कंपन न करें।	स्वरतंत्रियाँ काँपती हैं: गले पर उँगली रखकर कंपन महसूस करें।	50:Make it a flap, not a approximant (/l/).|60:Make it a flap, not a fricative (/z/).|53:Keep the contact alveolar; moving it retroflex gives /ɽ/.	0.16,0.36;0.28,0.44;0.46,0.50;0.63,0.55;0.80,0.70	no	neutral	0.18,0.33)CAPT" "\n"
    R"CAPT(53	ɽ	voiced,retroflex,flap	Curl the tongue tip back, then flick it forward so it strikes the gum ridge once on the way out.	Keep the lips relaxed and slightly open.	The tongue stays well clear of the teeth; contact is far behind them.	Let the air flow through a single quick tap; do not trill.	The vocal cords vibrate: put a finger on the throat and feel the buzz.	जीभ की नोक को पीछे की ओर मोड़कर तालु से लगाएँ।	होंठ ढीले और थोड़े खुले रखें।	जीभ दाँतों से दूर रहती है; संपर्क उनसे काफ़ी पीछे होता है।	जीभ से केवल एक बार तेज़ी से टकराएँ; कंपन न करें।	स्वरतंत्रियाँ काँपती हैं: गले पर उँगली रखकर कंपन महसूस करें।	54:Hold back the puff of breath; with it the sound becomes /ɽʱ/.|36:Make it a flap, not a plosive (/ɖ/).|38:Make it a flap, not a nasal (/ɳ/).	0.26,0.34;0.30,0.46;0.46,0.52;0.63,0.56;0.80,0.70	no	neutral	0.28,0.31)CAPT" "\n"
    R"CAPT(54	ɽʱ	voiced,retroflex,aspirated,flap	Curl the tongue tip back, then flick it forward so it strikes the gum ridge once on the way out.	Keep the lips relaxed and slightly open.	The tongue stays well clear of the teeth; contact is far behind them.	Let the air flow through a single quick tap, then add a breathy puff.	The vocal cords vibrate and stay buzzing through a breathy release.	जीभ की नोक को पीछे की ओर मोड़कर तालु से लगाएँ।	होंठ ढीले और थोड़े खुले रखें।	जीभ दाँतों से दूर रहती है; संपर्क उनसे काफ़ी पीछे होता है।	जीभ से एक बार तेज़ी से टकराएँ, फिर साँस छोड़ें।	स्वरतंत्रियाँ काँपती हैं और साँस छोड़ते समय भी कंपन बना रहता है।	53:Add the puff of breath; without it the sound becomes /ɽ/.|37:Make it a flap, not a plosive (/ɖʱ/).|35:Make it a flap, not a plosive (/ʈʰ/).	0.26,0.34;0.30,0.46;0.46,0.52;0.63,0.56;0.80,0.70	no	neutral	0.28,0.31)CAPT" "\n"
    R"CAPT(55	s	unvoiced,alveolar,fricative	Bring the tongue tip close to the gum ridge without touching it, leaving a narrow groove for the air.	Keep the lips relaxed and slightly open.	Keep the teeth nearly closed so the air hisses across their edges.	Push the air continuously through a narrow gap to make steady friction.	The vocal cords stay still: there is no buzz in the throat.	जीभ की नोक मसूड़ों के उभार से लगाएँ।	होंठ ढीले और थोड़े खुले रखें।	दाँत लगभग बंद रखें ताकि हवा उनके किनारों से सीटी की तरह निकले।	हवा को संकरे रास्ते से लगातार घर्षण के साथ निकालें।	स्वरतंत्रियाँ स्थिर रहती हैं: गले में कोई कंपन नहीं।	60:Keep the vocal cords still; voicing it gives /z/.|56:Keep the contact alveolar; moving it palatal gives /ʃ/.|57:Keep the contact alveolar; moving it retroflex gives /ʂ/.	0.16,0.36;0.28,0.44;0.46,0.50;0.63,0.55;0.80,0.70	no	neutral	0.18,0.36)CAPT" "\n"
    R"CAPT(56	ʃ	unvoiced,palatal,fricative	Raise the front of the tongue close to the hard palate, slightly behind the position for s.	Keep the lips relaxed and slightly open.	Keep the teeth slightly apart; the tongue does not touch them.	Push the air continuously through a narrow gap to make steady friction.	The vocal cords stay still: there is no buzz in the throat.	जीभ का अगला भाग कठोर तालु से लगाएँ।	होंठ ढीले और थोड़े खुले रखें।	दाँत थोड़े खुले रखें; जीभ उन्हें नहीं छूती।	हवा को संकरे रास्ते से लगातार घर्षण के साथ निकालें।	स्वरतंत्रियाँ स्थिर रहती हैं: गले में कोई कंपन नहीं।	29:Make it a fricative, not a affricate (/tʃ/).|55:Keep the contact palatal; moving it alveolar gives /s/.|57:Keep the contact palatal; moving it retroflex gives /ʂ/.	0.18,0.52;0.32,0.40;0.46,0.34;0.62,0.46;0.80,0.68	no	neutral	0.44,0.34)CAPT" "\n"
    R"CAPT(57	ʂ	unvoiced,retroflex,fricative	Curl the tongue tip back toward the roof of the mouth without quite touching it, further back than for ʃ.	Keep the lips relaxed and slightly open.	The tongue stays well clear of the teeth; contact is far behind them.	Push the air continuously through a narrow gap to make steady friction.	The vocal cords stay still: there is no buzz in the throat.	जीभ की नोक को पीछे की ओर मोड़कर तालु से लगाएँ।	होंठ ढीले और थोड़े खुले रखें।	जीभ दाँतों से दूर रहती है; संपर्क उनसे काफ़ी पीछे होता है।	हवा को संकरे रास्ते से लगातार घर्षण के साथ निकालें।	स्वरतंत्रियाँ स्थिर रहती हैं: गले में कोई कंपन नहीं।	34:Make it a fricative, not a plosive (/ʈ/).|55:Keep the contact retroflex; moving it alveolar gives /s/.|56:Keep the contact retroflex; moving it palatal gives /ʃ/.	0.26,0.34;0.30,0.46;0.46,0.52;0.63,0.56;0.80,0.70	no	neutral	0.28,0.34)CAPT" "\n"
    R"CAPT(58	ɦ	voiced,glottal,fricative	Leave the tongue at rest; the sound is made in the throat.	Keep the lips relaxed and slightly open.	Keep the teeth slightly apart; the tongue does not touch them.	Breathe out through an open throat with a light, breathy voice.	The vocal cords vibrate: put a finger on the throat and feel the buzz.	जीभ को आराम से रखें; ध्वनि गले से निकलती है।	होंठ ढीले और थोड़े खुले रखें।	दाँत थोड़े खुले रखें; जीभ उन्हें नहीं छूती।	खुले गले से हल्की साँस के साथ बोलें।	स्वरतंत्रियाँ काँपती हैं: गले पर उँगली रखकर कंपन महसूस करें।	60:Keep the contact glottal; moving it alveolar gives /z/.|62:Keep the contact glottal; moving it velar gives /ɣ/.|55:Keep the contact glottal; moving it alveolar gives /s/.	0.18,0.58;0.32,0.54;0.48,0.52;0.64,0.56;0.80,0.70	no	neutral	0.86,0.82)CAPT" "\n"
    R"CAPT(59	f	unvoiced,labiodental,fricative	Keep the tongue low and relaxed; the lower lip and upper teeth do the work.	Rest the lower lip lightly against the edge of the upper front teeth.	The upper front teeth rest on the inside of the lower lip.	Push the air continuously through a narrow gap to make steady friction.	The vocal cords stay still: there is no buzz in the throat.	जीभ ढीली रखें; निचला होंठ ऊपर के दाँतों से लगाएँ।	निचला होंठ ऊपर के दाँतों के किनारे से हल्का सटाएँ।	ऊपर के दाँत निचले होंठ के भीतरी भाग पर टिके रहते हैं।	हवा को संकरे रास्ते से लगातार घर्षण के साथ निकालें।	स्वरतंत्रियाँ स्थिर रहती हैं: गले में कोई कंपन नहीं।	55:Keep the contact labiodental; moving it alveolar gives /s/.|56:Keep the contact labiodental; moving it palatal gives /ʃ/.|57:Keep the contact labiodental; moving it retroflex gives /ʂ/.	0.18,0.58;0.32,0.52;0.48,0.50;0.64,0.55;0.80,0.70	no	neutral	0.08,0.47)CAPT" "\n"
    R"CAPT(60	z	voiced,alveolar,fricative	Bring the tongue tip close to the gum ridge without touching it, leaving a narrow groove for the air.	Keep the lips relaxed and slightly open.	Keep the teeth nearly closed so the air hisses across their edges.	Push the air continuously through a narrow gap to make steady friction.	The vocal cords vibrate: put a finger on the throat and feel the buzz.	जीभ की नोक मसूड़ों के उभार से लगाएँ।	होंठ ढीले और थोड़े खुले रखें।	दाँत लगभग बंद रखें ताकि हवा उनके किनारों से सीटी की तरह निकले।	हवा को संकरे रास्ते से लगातार घर्षण के साथ निकालें।	स्वरतंत्रियाँ काँपती हैं: गले पर उँगली रखकर कंपन महसूस करें।	55:Keep the vocal cords buzzing; without voice it becomes /s/.|50:Make it a fricative, not a approximant (/l/).|52:Make it a fricative, not a flap (/r/).	0.16,0.36;0.28,0.44;0.46,0.50;0.63,0.55;0.80,0.70	no	neutral	0.18,0.36)CAPT" "\n"
    R"CAPT(61	x	unvoiced,velar,fricative	Raise the back of the tongue close to the soft palate, leaving a narrow gap for the air to rasp through.	Keep the lips relaxed and slightly open.	Keep the teeth slightly apart; the tongue does not touch them.	Push the air continuously through a narrow gap to make steady friction.	The vocal cords stay still: there is no buzz in the throat.	जीभ का पिछला भाग कोमल तालु से लगाएँ।	होंठ ढीले और थोड़े खुले रखें।	दाँत थोड़े खुले रखें; जीभ उन्हें नहीं छूती।	हवा को संकरे रास्ते से लगातार घर्षण के साथ निकालें।	स्वरतंत्रियाँ स्थिर रहती हैं: गले में कोई कंपन नहीं।	62:Keep the vocal cords still; voicing it gives /ɣ/.|24:Make it a fricative, not a plosive (/k/).|55:Keep the contact velar; moving it alveolar gives /s/.	0.18,0.58;0.34,0.54;0.52,0.44;0.64,0.36;0.80,0.64	no	neutral	0.64,0.36)CAPT" "\n"
    R"CAPT(62	ɣ	voiced,velar,fricative	Raise the back of the tongue close to the soft palate, leaving a narrow gap for the air to rasp through.	Keep the lips relaxed and slightly open.	Keep the teeth slightly apart; the tongue does not touch them.	Push the air continuously through a narrow gap to make steady friction.	The vocal cords vibrate: put a finger on the throat and feel the buzz.	जीभ का पिछला भाग कोमल तालु से लगाएँ।	होंठ ढीले और थोड़े खुले रखें।	दाँत थोड़े खुले रखें; जीभ उन्हें नहीं छूती।	हवा को संकरे रास्ते से लगातार घर्षण के साथ निकालें।	स्वरतंत्रियाँ काँपती हैं: गले पर उँगली रखकर कंपन महसूस करें।	61:Keep the vocal cords buzzing; without voice it becomes /x/.|26:Make it a fricative, not a plosive (/g/).|28:Make it a fricative, not a nasal (/ŋ/).	0.18,0.58;0.34,0.54;0.52,0.44;0.64,0.36;0.80,0.64	no	neutral	0.64,0.36)CAPT" "\n"
    R"CAPT(63	q	unvoiced,uvular,plosive	Raise the very back of the tongue against the uvula, further back than for k.	Keep the lips relaxed and slightly open.	Keep the teeth slightly apart; the tongue does not touch them.	Block the air completely, then release it in one clean burst with no extra puff of breath afterwards.	The vocal cords stay still: there is no buzz in the throat.	जीभ का सबसे पिछला भाग कौवे (अलिजिह्वा) से लगाएँ।	होंठ ढीले और थोड़े खुले रखें।	दाँत थोड़े खुले रखें; जीभ उन्हें नहीं छूती।	हवा पूरी तरह रोकें, फिर एक झटके में छोड़ें। बाद में अतिरिक्त साँस न छोड़ें।	स्वरतंत्रियाँ स्थिर रहती हैं: गले में कोई कंपन नहीं।	24:Keep the contact uvular; moving it velar gives /k/.|34:Keep the contact uvular; moving it retroflex gives /ʈ/.|39:Keep the contact uvular; moving it dental gives /t̪/.	0.18,0.58;0.34,0.56;0.52,0.50;0.70,0.40;0.82,0.60	no	neutral	0.76,0.38)CAPT" "\n";

}  // namespace capt::data
