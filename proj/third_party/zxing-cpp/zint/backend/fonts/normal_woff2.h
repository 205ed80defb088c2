/* fonts/normal_woff2.h - Arimo (Latin-1 subset) as base 64 string of WOFF2, for embedding in SVG */
/*
    libzint - the open source barcode library
    Copyright (C) 2023 Robin Stuart <rstuart114@gmail.com>

    Redistribution and use in source and binary forms, with or without
    modification, are permitted provided that the following conditions
    are met:

    1. Redistributions of source code must retain the above copyright
       notice, this list of conditions and the following disclaimer.
    2. Redistributions in binary form must reproduce the above copyright
       notice, this list of conditions and the following disclaimer in the
       documentation and/or other materials provided with the distribution.
    3. Neither the name of the project nor the names of its contributors
       may be used to endorse or promote products derived from this software
       without specific prior written permission.

    THIS SOFTWARE IS PROVIDED BY THE COPYRIGHT HOLDERS AND CONTRIBUTORS "AS IS" AND
    ANY EXPRESS OR IMPLIED WARRANTIES, INCLUDING, BUT NOT LIMITED TO, THE
    IMPLIED WARRANTIES OF MERCHANTABILITY AND FITNESS FOR A PARTICULAR PURPOSE
    ARE DISCLAIMED.  IN NO EVENT SHALL THE COPYRIGHT OWNER OR CONTRIBUTORS BE LIABLE
    FOR ANY DIRECT, INDIRECT, INCIDENTAL, SPECIAL, EXEMPLARY, OR CONSEQUENTIAL
    DAMAGES (INCLUDING, BUT NOT LIMITED TO, PROCUREMENT OF SUBSTITUTE GOODS
    OR SERVICES; LOSS OF USE, DATA, OR PROFITS; OR BUSINESS INTERRUPTION)
    HOWEVER CAUSED AND ON ANY THEORY OF LIABILITY, WHETHER IN CONTRACT, STRICT
    LIABILITY, OR TORT (INCLUDING NEGLIGENCE OR OTHERWISE) ARISING IN ANY WAY
    OUT OF THE USE OF THIS SOFTWARE, EVEN IF ADVISED OF THE POSSIBILITY OF
    SUCH DAMAGE.
 */
/* SPDX-License-Identifier: BSD-3-Clause */

#ifndef Z_NORMAL_WOFF2_H
#define Z_NORMAL_WOFF2_H

/*
    Copyright 2013 Steve Matteson

    Licensed under the Apache License, Version 2.0 (the "License");
    you may not use this file except in compliance with the License.
    You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

    Unless required by applicable law or agreed to in writing, software
    distributed under the License is distributed on an "AS IS" BASIS,
    WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
    See the License for the specific language governing permissions and
    limitations under the License.
*/
/* SPDX-License-Identifier: Apache-2.0 */
static const char normal_woff2[18233] = {
    'd','0','9','G','M','g','A','B','A','A','A','A','A','D','V','o','A','B','E','A','A','A','A','A','a',
    '9','w','A','A','D','U','I','A','A','E','A','A','A','A','A','A','A','A','A','A','A','A','A','A','A',
    'A','A','A','A','A','A','A','A','A','A','A','A','A','A','G','i','I','b','h','E','I','c','L','A','Z',
    'g','A','I','F','8','C','I','F','4','C','Z','w','V','E','Q','g','K','g','a','A','g','g','Y','t','V',
    'C','4','M','W','A','A','E','2','A','i','Q','D','h','i','g','E','I','A','W','C','T','A','c','g','D',
    'I','F','v','G','9','J','e','V','Q','d','q','t','w','M','F','S','i','j','f','L','C','M','D','w','c',
    'b','B','Y','P','G','R','s','v','8','/','H','j','1','k','N','g','1','4','L','x','C','J','y','C','S',
    'V','0','G','K','z','b','a','c','w','b','S','u','J','7','H','T','X','2','6','+','y','5','0','J','Z',
    'd','1','7','7','Z','i','G','/','j','L','A','2','B','U','h','U','g','p','Q','s','I','G','z','S','7',
    'j','M','7','I','B','S','K','t','W','d','Y','P','b','1','w','x','W','T','C','R','W','F','Y','s','D',
    'i','K','e','R','1','i','1','/','f','h','D','g','S','X','n','X','C','O','S','y','A','m','3','/','n',
    'X','/','o','T','g','k','l','t','i','1','U','E','l','X','r','q','W','c','A','a','2','j','f','x','J',
    'T','l','4','e','n','t','b','B','/','7','l','3','Z','3','Y','f','q','E','+','j','C','o','1','Z','C',
    'o','1','J','T','K','C','q','t','D','N','A','8','z','q','m','e','j','7','w','p','u','J','F','P','i',
    'b','3','o','h','c','y','f','m','K','Y','j','Y','1','+','M','R','u','z','i','Z','6','a','6','G','G',
    '6','/','x','9','f','6','n','3','7','4','i','P','6','x','7','b','s','X','0','L','w','M','E','T','Q',
    'Y','Q','w','C','j','D','B','t','q','X','n','W','v','X','v','7','3','0','/','X','l','d','u','l','6',
    '9','e','9','T','2','f','v','j','G','S','c','k','e','x','T','F','K','L','X','Y','5','v','X','p','8',
    'b','V','r','i','E','5','n','w','/','I','n','8','D','S','N','J','I','d','t','O','x','0','g','F','w',
    'z','C','T','5','w','f','t','p','v','8','o','A','k','5','i','F','J','S','H','x','C','O','U','E','a',
    'l','A','a','l','U','j','0','k','C','H','G','h','I','X','c','+','t','b','b','5','j','z','n','V','J',
    'Y','9','B','g','6','/','9','A','d','k','D','K','r','i','k','0','M','Z','J','R','v','p','D','K','f',
    'Y','I','T','o','X','D','V','b','f','T','k','0','f','p','T','v','X','L','/','X','J','T','I','k','W',
    '0','M','+','l','G','Z','J','9','x','r','0','C','Q','X','O','+','P','7','w','l','V','W','V','Y','a',
    'v','a','8','B','1','7','x','j','+','2','/','s','W','E','U','A','D','g','R','n','3','5','u','q','u',
    '/','v','e','+','/','8','S','C','K','U','Q','K','z','m','F','m','x','H','C','Q','B','h','U','Z','1',
    'D','h','C','F','Z','S','7','j','R','w','I','L','v','a','p','f','v','O','5','q','v','q','3','w','E',
    'g','S','B','G','S','W','1','N','s','p','w','/','L','H','5','a','6','5','Y','k','7','f','e','P','0',
    'u','3','I','9','L','9','f','s','G','c','S','q','C','6','Q','W','k','1','j','F','W','m','s','6','e',
    'f','w','5','Q','c','e','2','1','S','4','8','i','K','o','O','j','2','L','I','r','Y','y','q','g','2',
    '/','b','/','8','9','U','s','5','2','/','A','0','g','L','y','c','+','G','x','E','b','S','p','U','R',
    'e','i','E','U','j','X','b','Q','z','H','X','L','p','z','p','2','7','3','T','8','7','2','J','3','Z',
    'X','R','C','B','h','L','A','A','o','b','C','g','7','g','B','Q','P','A','G','g','E','s','E','L','S',
    'N','K','D','q','E','u','5','c','g','i','p','J','E','F','e','I','n','X','n','m','E','J','1','p','d',
    'v','U','F','W','7','b','m','I','u','y','C','u','m','x','N','/','0','h','m','K','O','n','l','l','l',
    'z','G','0','q','I','/','9','s','7','r','F','Y','2','G','y','4','F','M','5','d','m','L','7','A','j',
    'j','j','j','F','J','s','x','v','8','/','7','Y','+','J','4','e','/','o','g','+','G','4','H','J','k',
    'E','F','v','t','t','W','q','z','d','8','P','W','J','N','S','I','9','a','U','6','y','M','w','B','X',
    'i','p','a','/','v','e','h','8','O','D','B','s','K','P','W','W','P','e','N','2','+','S','v','Q','U',
    'B','n','X','P','V','b','A','D','J','C','z','r','N','P','u','Q','v','r','Y','s','R','t','H','D','x',
    '4','l','G','/','X','S','1','Q','8','D','l','c','c','t','5','s','B','E','m','b','B','4','i','r','Y',
    'x','Z','p','g','r','A','3','D','n','j','9','Z','o','A','L','c','g','5','F','J','b','Z','F','2','y',
    'E','d','y','M','i','L','5','b','g','U','2','1','i','J','w','4','y','3','3','S','y','K','1','G','j',
    'T','Z','8','i','Y','C','V','N','Q','j','j','z','5','8','h','M','A','Z','F','U','T','x','s','0','A',
    'Z','d','2','Y','a','C','z','P','9','j','1','m','g','k','X','T','p','q','B','Z','+','G','r','C','z',
    '0','F','A','b','5','C','p','L','S','b','K','A','g','W','P','d','X','W','l','L','A','J','K','j','0',
    'v','c','i','s','L','j','X','0','R','Z','K','A','o','2','V','x','w','w','c','U','3','j','2','R','J',
    '+','l','M','q','K','N','J','E','T','M','g','y','n','k','C','v','0','G','n','F','2','F','n','Y','I',
    'D','k','W','X','p','p','A','g','P','D','N','4','g','Y','/','w','q','x','E','B','O','C','Z','s','a',
    'o','M','A','A','J','S','q','O','A','t','a','J','Q','g','Y','F','Q','x','C','f','U','K','o','A','g',
    'Q','M','B','A','w','M','F','B','T','Z','Y','G','B','g','1','s','6','Z','C','W','l','o','I','y','k',
    'N','Q','D','q','L','O','A','B','Q','L','Q','v','U','G','j','y','E','j','y','5','8','2','e','N','w',
    'Q','K','X','N','G','R','G','j','4','R','r','Y','5','e','y','R','G','9','q','W','Q','Z','H','W','0',
    'o','o','L','m','9','q','M','5','V','B','K','2','v','m','+','S','3','k','7','y','n','F','T','t','y',
    'n','X','A','O','5','x','f','f','J','1','U','S','n','h','T','6','5','V','L','K','g','V','u','O','v',
    'O','u','+','S','A','I','w','w','d','N','u','T','9','N','6','8','j','i','o','a','D','V','Y','y','e',
    'C','X','A','8','9','+','V','3','A','C','g','7','V','x','L','A','i','g','w','3','g','s','S','c','Z',
    'I','d','b','x','u','U','n','6','M','t','D','u','t','7','/','w','J','i','i','d','S','B','f','m','3',
    'n','9','f','1','/','C','b','U','j','y','r','C','k','x','h','o','y','G','q','g','x','D','D','R','E',
    '3','W','p','G','r','2','L','w','F','h','U','p','R','r','B','o','1','p','1','y','t','J','Y','u','W',
    'V','a','n','T','p','k','W','9','M','O','H','o','z','u','m','A','1','q','p','d','j','0','5','d','u',
    'o','2','L','0','I','e','l','V','4','N','I','s','4','o','M','6','M','c','W','Z','d','K','0','f','B',
    'j','R','Y','s','S','J','h','V','U','h','H','h','5','O','g','k','R','E','B','E','m','S','T','U','i',
    'R','J','l','W','6','T','B','k','a','V','c','p','y','X','r','Y','c','U','2','Y','w','W','f','G','M',
    'J','/','l','Y','f','2','r','Z','e','a','c','x','C','E','Z','7','4','3','D','W','x','k','E','Y','W',
    'L','9','4','8','D','E','N','v','G','R','9','b','a','i','E','2','s','z','m','n','h','+','m','I','+',
    'm','L','l','y','t','i','+','O','x','X','t','N','T','I','p','6','/','S','w','L','0','i','L','3','I',
    'j','C','Z','s','u','H','o','4','V','o','J','I','k','t','n','S','c','l','7','0','e','8','8','O','5',
    'L','T','b','i','m','7','G','y','0','7','D','+','D','9','7','i','l','U','U','A','t','f','B','f','G',
    'N','P','u','c','/','Z','a','1','g','p','4','Y','1','t','C','d','G','8','I','g','9','4','9','W','M',
    'c','v','L','P','b','m','s','L','h','0','7','y','m','8','u','Q','A','2','v','+','b','I','x','q','Q',
    's','e','a','C','0','B','r','w','H','3','O','J','m','D','S','h','p','O','J','M','B','A','b','P','y',
    'P','g','M','G','a','9','Y','Z','D','F','D','1','y','x','j','f','l','5','g','G','J','M','k','5','E',
    '/','F','4','w','8','S','m','+','x','Y','w','n','6','w','Q','a','O','x','e','n','o','a','v','Q','A',
    '5','W','a','t','z','V','R','W','d','Q','N','k','f','0','k','c','p','6','M','D','F','y','8','w','j',
    'd','K','9','j','U','M','k','h','5','N','g','Y','8','t','+','+','k','T','g','J','+','M','E','I','q',
    'D','E','d','M','S','5','q','d','J','P','z','k','6','6','q','o','I','v','w','2','Q','d','K','L','e',
    'h','E','C','t','s','o','W','r','F','W','r','Y','Z','j','0','X','9','q','D','l','S','p','c','K','Z',
    '4','f','b','I','W','+','J','n','C','0','3','n','x','0','K','R','S','x','0','V','d','Y','I','C','e',
    'a','p','v','S','y','Z','5','H','f','Z','f','S','e','w','q','c','6','E','U','+','4','Q','s','6','O',
    'S','2','+','t','H','J','C','D','t','B','M','5','N','g','+','w','g','b','I','E','v','L','S','A','R',
    '0','O','h','1','5','Z','C','Z','V','I','9','2','f','Z','D','J','q','X','3','N','o','a','m','D','E',
    'Q','q','L','0','A','u','o','p','7','I','a','4','m','E','b','C','S','D','C','W','o','R','i','P','m',
    'K','Y','L','N','r','Y','U','c','D','h','z','2','l','t','a','n','j','+','Z','L','B','0','r','V','G',
    'x','E','v','R','b','h','n','q','Q','a','i','O','k','h','2','f','J','8','I','u','r','R','J','m','1',
    'v','i','6','k','8','L','s','9','T','p','4','7','H','s','b','k','N','S','z','r','q','t','8','X','y',
    'y','L','F','o','I','+','t','i','Q','V','J','l','y','O','u','T','L','Y','g','M','s','L','N','W','A',
    'T','E','6','f','c','j','Y','Y','J','c','D','u','J','B','2','6','9','B','3','p','I','w','8','5','9',
    'x','g','U','p','W','j','N','g','O','S','Q','y','o','M','U','+','d','J','H','+','p','G','u','2','N',
    '+','e','h','d','s','e','k','0','T','L','n','t','d','U','Q','v','9','G','K','H','M','r','B','Q','8',
    '7','S','B','h','B','z','q','7','G','g','K','l','W','a','T','k','B','h','j','C','2','Y','z','U','F',
    'r','K','w','3','D','V','K','e','5','/','k','U','J','5','s','Z','R','V','w','C','0','Z','G','S','A',
    'Y','F','7','6','X','8','G','I','j','L','W','6','V','i','v','W','c','l','5','n','C','B','F','x','1',
    'y','r','+','s','W','z','M','w','N','B','b','B','J','m','Q','d','2','f','r','Q','y','k','a','A','f',
    's','G','L','2','1','2','V','I','R','r','I','9','P','I','L','d','K','Q','S','B','l','U','B','a','e',
    'j','8','I','d','m','7','S','P','h','W','x','S','4','9','8','R','G','0','m','7','K','S','Q','Q','N',
    'r','x','R','E','j','v','T','s','v','c','f','n','c','a','V','7','K','n','t','H','i','C','D','4','1',
    'B','K','p','B','q','g','a','c','B','c','4','J','W','w','m','h','h','f','A','d','g','K','a','Z','I',
    'J','h','N','x','l','1','F','w','P','Z','Z','s','I','n','3','X','I','j','y','5','r','P','R','D','4',
    'd','N','U','S','w','z','u','y','q','I','A','j','Z','6','T','S','n','C','0','0','M','1','Y','7','5',
    'F','o','w','A','U','W','w','C','E','X','D','x','g','0','K','4','v','O','U','Y','S','Q','T','c','e',
    'm','I','h','o','q','E','W','B','q','m','A','I','M','K','W','N','R','R','R','c','Q','s','O','q','P',
    '7','L','p','k','d','g','l','+','w','R','E','x','A','F','K','6','r','C','/','7','8','U','M','R','r',
    'o','8','N','n','n','T','k','i','G','B','B','F','i','z','y','R','V','E','M','k','U','T','H','L','F',
    'I','E','O','F','k','E','I','x','y','U','i','x','y','F','i','x','y','U','R','x','y','F','R','x','1',
    '3','V','g','I','3','S','F','V','e','4','9','s','U','w','5','0','K','3','L','a','F','3','n','u','m',
    'd','x','E','n','h','c','f','W','N','x','G','+','g','8','n','2','Z','I','E','D','p','Y','3','G','f',
    'g','D','5','4','1','7','A','1','K','m','E','E','F','C','g','o','U','a','l','B','o','Q','K','E','F',
    'h','T','k','o','L','E','B','h','C','Q','o','r','0','P','w','m','q','C','A','t','2','a','p','0','y',
    'A','o','1','e','I','m','W','I','X','z','W','P','q','H','l','F','n','p','g','y','+','9','W','v','h',
    '2','y','D','a','J','O','a','5','P','6','7','C','c','5','u','r','c','/','K','N','X','O','y','Y','5',
    'x','5','s','d','B','3','6','r','d','z','Y','b','t','H','M','0','w','0','b','K','X','Z','Y','f','O',
    'r','m','7','a','H','8','7','v','g','W','4','o','n','d','t','H','0','u','x','l','V','V','w','O','y',
    'N','V','o','8','T','8','f','k','j','+','4','q','8','E','c','T','8','a','9','E','O','/','z','+','X',
    'I','A','K','q','i','j','e','h','p','w','q','/','0','W','y','n','C','I','/','E','C','R','4','W','h',
    'c','D','E','j','U','j','+','5','8','j','I','h','l','v','1','H','e','Z','A','D','K','Z','Q','p','3',
    'w','q','f','1','G','E','u','e','7','E','C','F','3','p','2','j','q','Y','8','C','m','t','h','7','H',
    'i','t','P','A','E','i','+','0','k','e','c','2','I','u','N','u','e','V','I','x','c','D','n','h','X',
    'd','h','M','x','I','V','4','e','j','r','V','E','4','H','K','e','c','V','g','1','V','E','J','m','Y',
    'I','f','w','S','W','n','f','W','h','/','U','V','0','Y','q','Z','S','K','U','0','M','x','Y','T','b',
    'U','Y','8','U','1','O','Q','0','t','1','0','7','J','X','1','W','u','p','B','n','p','K','Y','Z','C',
    'F','3','F','M','O','m','r','i','0','X','e','Q','s','3','S','h','b','u','m','0','z','3','P','Z','C',
    'x','L','3','P','a','T','q','q','/','w','2','A','a','2','N','x','N','w','p','Y','6','Y','5','E','a',
    'w','K','J','0','h','P','N','M','8','N','x','2','R','A','U','k','S','K','C','a','M','x','M','N','p',
    'n','R','h','L','H','t','E','z','H','A','Q','J','Q','2','Z','q','0','l','x','M','7','i','8','+','T',
    '8','I','b','s','t','q','A','G','+','I','B','R','i','/','+','z','4','A','Y','K','G','v','F','i','V',
    '7','b','n','A','r','W','y','j','y','X','p','J','J','L','e','u','O','W','r','f','a','4','U','8','A',
    'Y','B','m','x','J','d','H','5','Q','M','t','p','7','9','P','K','W','I','c','+','v','p','K','t','y',
    'm','s','K','N','m','D','e','t','w','R','Z','E','U','O','N','b','T','m','m','7','q','i','+','W','C',
    's','l','j','H','6','I','L','y','p','o','3','7','r','u','v','u','n','u','/','u','a','z','t','y','U',
    '/','3','L','e','D','E','N','y','u','/','D','Z','x','6','m','F','2','R','X','l','c','x','H','I','2',
    'r','g','M','U','c','v','Z','n','c','S','U','J','C','T','S','e','h','n','v','a','g','F','w','M','2',
    'X','l','t','8','f','B','P','l','P','M','m','7','8','i','6','i','1','2','M','G','d','r','s','9','/',
    '1','R','0','C','I','z','7','w','R','j','2','5','A','V','P','K','k','2','V','I','S','0','q','k','n',
    'v','r','4','M','Q','R','E','f','d','X','2','n','V','I','c','8','d','3','Y','s','K','H','B','0','7',
    's','8','o','k','a','v','N','v','a','I','6','k','H','+','f','Q','8','L','D','x','C','B','L','S','I',
    '4','5','C','s','x','7','o','4','f','p','M','n','N','w','X','J','K','l','N','O','7','a','A','q','U',
    'o','m','n','s','O','Y','4','n','k','w','V','z','1','B','T','B','L','c','B','U','5','F','Y','S','w',
    'j','Y','i','t','K','p','6','Y','e','n','u','A','j','i','L','S','H','g','K','1','Y','G','+','A','X',
    'Y','H','k','I','q','i','Z','Y','S','i','K','k','k','W','Q','6','E','l','E','q','y','p','Q','R','y',
    'q','i','z','i','w','V','F','K','N','K','R','a','Q','q','C','m','K','O','t','+','+','E','o','D','Q',
    'Z','p','L','C','L','Q','U','7','b','Y','m','G','N','o','B','0','C','4','M','7','Q','F','o','H','0',
    'A','H','A','D','o','E','0','B','F','g','y','x','g','R','q','/','H','s','C','Y','l','D','6','A','J',
    'T','E','O','W','s','w','p','k','B','y','Z','r','v','u','v','S','T','R','Z','B','0','G','S','R','Z',
    'r','U','U','J','w','j','p','Q','s','A','m','U','v','Q','V','b','w','I','4','v','y','D','5','I','c',
    'g','h','S','H','B','+','L','G','0','6','B','h','n','O','g','4','R','J','o','u','H','K','Q','W','5',
    'D','k','H','q','R','4','w','O','L','A','M','x','B','4','B','Q','L','v','Q','O','D','D','Q','b','5',
    'B','k','t','B','P','Q','Z','T','/','j','B','/','/','4','2','0','Z','r','L','m','a','d','I','2','3',
    'b','1','k','r','L','W','I','u','w','G','l','g','L','H','d','X','3','q','i','7','Z','K','M','S','D',
    't','H','+','Q','u','e','h','V','4','T','j','N','q','/','Y','R','4','A','p','Z','w','B','m','H','y',
    'Z','A','t','w','w','Q','3','w','G','W','3','e','m','3','H','6','P','p','I','2','8','I','G','N','g',
    'p','B','3','K','M','y','w','l','V','0','F','r','Y','o','E','4','n','u','a','9','R','z','s','S','u',
    'B','F','6','a','/','5','9','z','W','a','q','c','w','6','K','5','N','m','R','b','N','g','y','I','B',
    'w','j','j','X','Y','v','c','W','G','c','8','r','C','G','R','C','K','P','h','C','D','r','h','Y','a',
    'c','T','5','M','v','J','T','e','3','t','x','A','v','e','6','M','O','N','Y','V','P','h','S','1','k',
    '3','9','e','m','l','X','0','6','m','d','D','z','m','x','5','H','A','v','P','L','s','0','P','s','U',
    '+','b','0','u','5','c','a','M','x','7','z','a','V','K','e','p','7','a','V','+','3','P','6','5','U',
    'u','e','j','d','F','X','e','c','g','7','u','j','Q','5','V','4','U','X','2','d','C','G','4','0','F',
    't','K','9','/','a','p','H','F','y','J','D','b','z','x','a','4','U','/','H','g','n','O','9','N','D',
    'F','h','X','+','k','Z','+','+','T','f','K','Z','u','P','d','P','u','B','Z','s','d','F','q','7','K',
    'P','e','H','F','M','t','9','j','H','p','3','S','+','O','F','p','7','U','V','z','J','c','j','7','n',
    'X','K','K','m','K','c','y','U','J','+','u','O','u','K','P','+','4','l','t','b','J','y','g','1','9',
    'f','x','Y','D','D','W','J','1','r','y','4','k','d','K','q','X','I','/','8','r','+','R','p','4','j',
    'H','y','C','D','U','4','3','U','+','m','X','R','c','c','D','r','U','X','0','b','I','q','9','w','+',
    'd','z','y','G','V','p','6','4','/','1','L','P','5','H','l','g','F','1','i','J','i','T','T','I','s',
    'C','T','K','0','1','Y','O','N','b','B','m','C','m','i','U','U','L','+','U','x','+','J','y','V','R',
    'c','W','M','a','P','Z','u','M','Q','p','j','1','K','/','n','J','N','C','S','M','J','j','k','7','a',
    '/','g','s','G','a','a','2','t','t','N','n','v','Z','G','c','n','4','u','e','n','s','2','z','u','h',
    'a','C','E','P','S','h','O','8','d','X','W','b','H','v','w','8','L','b','R','1','5','R','4','0','R',
    'Q','u','Y','w','v','t','v','M','L','W','G','M','2','V','N','d','E','C','F','s','Y','9','P','l','K',
    'L','S','P','m','w','0','5','9','q','S','t','W','A','l','U','D','2','l','z','a','o','Z','9','v','i',
    '4','R','b','a','D','r','s','2','W','C','2','v','y','r','z','+','V','Q','N','h','H','F','x','g','Z',
    'Q','H','g','s','E','z','U','3','9','t','S','6','q','e','5','M','D','c','0','k','u','3','J','q','G',
    'd','3','m','C','q','5','x','g','2','W','X','5','z','Z','q','y','C','l','d','a','t','X','I','e','/',
    '0','1','2','A','b','o','o','9','r','k','b','t','o','f','I','/','z','U','f','N','p','L','q','y','D',
    'n','Y','p','H','d','Q','u','E','a','w','2','r','1','g','0','N','m','/','Q','N','U','F','3','g','0',
    'x','1','f','f','Q','w','M','P','W','p','0','5','2','g','e','i','a','o','0','9','/','e','D','F','S',
    'B','V','K','M','U','6','d','C','s','+','Y','n','A','g','X','g','m','r','6','s','N','V','C','z','w',
    'R','J','g','8','d','m','b','h','q','Z','H','P','s','r','S','O','u','j','J','L','A','s','N','X','k',
    'V','m','7','B','9','U','9','h','m','x','h','6','a','t','y','w','R','u','m','6','E','j','J','u','o',
    'r','l','7','e','A','Q','q','M','Q','+','i','j','h','w','g','9','G','J','Q','I','Q','x','B','9','Y',
    'O','c','Q','V','u','x','U','z','h','n','8','z','w','i','Y','j','J','V','6','w','4','Y','y','N','Y',
    'W','9','1','2','A','2','3','M','l','g','v','d','U','b','j','I','m','5','R','L','P','H','E','7','D',
    'W','F','z','l','9','M','U','F','2','g','W','b','P','p','3','B','q','/','3','f','T','p','5','N','7',
    '5','O','L','d','t','K','b','0','e','6','0','O','C','Y','f','R','1','V','+','l','T','r','t','X','a',
    'F','0','W','W','9','J','e','u','P','+','Q','E','L','I','X','c','K','x','O','L','F','e','w','t','w',
    'v','L','7','N','W','a','v','P','F','i','s','q','b','4','I','C','S','2','d','k','q','q','r','s','x',
    'd','v','H','W','m','7','w','9','o','T','C','p','Z','f','F','i','S','9','6','h','K','Z','c','c','l',
    'J','/','F','g','c','G','U','T','J','5','R','i','M','z','r','Y','t','t','b','z','/','G','r','r','S',
    'D','l','X','2','l','U','O','O','X','v','h','c','P','6','/','x','A','5','2','l','r','q','D','b','i',
    '1','m','/','j','H','V','u','/','w','4','H','5','m','/','0','Q','a','p','J','z','R','T','Y','4','q',
    '0','D','o','L','a','X','i','o','+','5','d','e','8','L','K','8','b','h','v','z','o','1','2','i','B',
    'd','Q','4','l','N','G','U','+','+','6','S','a','v','m','8','v','P','0','C','n','n','Q','q','1','m',
    'q','R','R','b','c','C','p','u','I','v','F','5','H','V','l','0','+','Q','A','i','L','n','3','Y','s',
    '6','Q','v','3','u','C','B','5','v','Y','i','T','B','S','K','m','f','H','j','8','4','T','K','m','s',
    '7','W','n','B','0','K','L','B','e','Z','L','z','h','t','q','F','N','d','n','7','X','T','R','r','U',
    'd','N','D','H','3','t','m','z','j','H','b','N','M','O','y','t','w','C','5','4','F','N','1','7','B',
    '0','Z','Y','K','M','p','k','2','f','h','7','K','Q','/','K','0','/','K','S','v','q','m','U','f','n',
    '5','/','e','5','u','O','7','/','L','O','i','L','e','P','S','o','W','q','0','f','n','L','4','u','+',
    'j','L','K','G','H','s','d','c','V','F','y','h','k','G','J','6','a','2','E','U','W','Q','j','e','U',
    '4','9','a','I','5','u','q','g','D','9','l','E','7','s','K','Q','8','l','H','j','c','f','H','T','L',
    'k','l','J','4','f','S','g','+','5','Q','x','b','V','t','Z','V','J','n','t','Z','O','S','h','w','H',
    '+','6','x','+','x','y','e','h','2','a','b','M','W','I','S','9','q','v','3','n','F','G','B','J','O',
    'B','n','W','J','w','G','G','D','g','j','v','y','U','D','+','v','i','q','2','N','t','c','y','O','u',
    '0','l','M','C','D','8','U','u','H','N','2','a','6','T','h','s','v','4','U','X','9','C','Q','l','N',
    'a','o','T','s','p','9','l','+','v','A','V','y','4','P','h','o','B','c','+','h','5','w','X','H','q',
    'T','N','L','D','7','y','4','q','/','i','V','1','w','+','m','S','f','C','J','R','2','J','K','T','m',
    'n','6','l','9','I','p','z','I','r','Z','p','d','z','k','9','B','X','5','T','A','Q','p','B','2','8',
    'y','2','Z','h','I','T','R','t','9','N','4','o','S','y','/','V','R','r','y','+','Y','5','X','C','q',
    'z','J','Y','T','T','0','p','8','Z','O','r','H','d','4','9','C','q','t','f','l','z','G','c','1','L',
    'o','b','A','5','e','J','0','k','I','j','a','o','i','s','R','u','V','P','u','o','Q','k','q','R','2',
    '+','3','o','5','D','y','z','t','n','O','M','u','E','l','y','l','k','h','4','T','O','A','Y','8','x',
    'r','i','e','E','Z','z','o','d','P','Q','1','4','p','O','U','4','J','7','W','2','y','7','u','W','H',
    'L','g','R','+','0','1','x','q','L','p','9','G','Q','Y','G','q','s','R','n','T','q','l','U','4','n',
    'k','3','U','u','V','a','X','K','S','n','1','n','s','S','i','F','6','e','a','p','s','i','f','v','B',
    'F','b','M','y','A','/','W','p','Z','v','8','A','e','+','E','G','e','t','S','Q','h','e','9','m','8',
    'N','+','s','0','2','u','W','N','L','d','7','e','6','c','4','c','/','N','K','f','0','t','v','V','j',
    'U','+','u','+','B','X','2','2','D','g','L','P','q','O','0','b','F','a','2','j','T','k','B','7','U',
    'R','o','L','G','X','2','J','T','P','I','5','S','g','Y','M','1','p','O','Y','u','g','K','h','9','1',
    '0','i','M','V','r','1','8','4','c','r','M','0','G','k','E','3','V','C','y','H','/','v','I','w','2',
    'N','k','J','c','6','E','3','O','K','Y','X','f','m','c','R','s','J','h','K','Z','D','T','R','i','z',
    'D','l','s','r','Q','U','F','h','E','W','/','N','r','G','5','m','2','s','U','S','S','t','b','8','o',
    'w','h','I','d','u','I','0','c','9','8','u','e','C','E','A','N','9','N','q','f','y','n','w','c','P',
    'x','m','j','0','3','6','h','0','K','d','D','n','W','J','s','L','E','t','9','n','o','8','r','K','U',
    'k','I','T','Y','q','V','c','E','P','D','3','m','i','P','5','l','l','s','G','G','7','v','7','L','T',
    'z','Z','B','o','m','a','q','u','j','D','K','v','o','b','1','O','b','8','z','j','3','N','+','Y','v',
    '/','n','r','j','4','p','z','L','F','4','O','b','3','S','I','4','v','q','b','n','a','T','3','e','A',
    'e','J','o','t','3','Z','Y','G','M','8','D','G','c','2','b','C','X','y','M','U','k','7','D','O','s',
    'C','3','J','B','k','P','A','s','o','x','R','9','a','F','l','t','3','t','p','D','R','H','d','s','u',
    'V','y','r','i','C','J','T','2','D','F','0','B','m','x','Y','5','Z','2','E','j','H','P','y','o','x',
    'h','L','K','m','g','o','N','E','p','j','9','H','B','c','n','z','o','b','f','w','k','D','L','M','a',
    'd','2','x','W','u','x','P','T','D','N','7','c','d','o','P','D','5','h','m','6','z','R','o','E','M',
    'i','Y','+','X','8','j','i','K','f','o','/','/','G','L','s','M','r','A','u','v','P','R','f','u','l',
    '4','I','8','+','K','T','m','Y','7','C','N','w','V','F','g','c','8','4','L','U','T','B','k','i','d',
    'f','d','H','5','3','Q','o','x','n','M','I','X','y','Y','E','Q','X','b','q','t','w','H','o','z','Q',
    'z','y','d','G','4','M','Z','z','k','7','I','w','t','l','4','u','t','s','J','a','p','E','S','A','c',
    'c','U','i','v','t','y','v','2','E','j','2','X','T','d','x','i','W','N','+','A','V','q','c','a','C',
    'm','8','i','L','+','o','e','P','E','A','P','B','+','K','w','z','E','W','H','h','P','s','O','Q','1',
    'l','3','A','d','K','k','C','P','s','s','M','6','F','c','/','n','Q','z','l','R','p','B','e','C','i',
    'c','O','c','E','V','Y','l','I','Y','l','Q','/','j','w','K','y','L','P','4','w','l','S','H','y','z',
    'B','I','S','K','v','F','v','n','W','s','T','j','h','a','v','u','4','s','3','K','+','J','k','q','y',
    'U','n','J','c','s','G','x','r','t','2','9','R','d','A','d','i','w','u','9','g','q','b','Q','n','O',
    'M','1','p','f','K','T','g','I','n','q','r','4','2','l','T','o','K','c','g','L','o','F','3','P','R',
    'J','J','c','6','6','T','N','J','h','x','c','C','G','q','P','f','S','9','7','c','2','z','c','Z','W',
    's','L','6','h','N','t','c','H','y','F','W','F','h','i','s','M','A','3','1','i','a','l','N','h','6',
    's','3','S','W','1','w','x','J','9','x','H','u','1','d','l','l','6','H','f','J','d','Q','i','A','9',
    'm','1','J','N','V','S','D','R','I','6','M','y','X','R','U','Z','O','c','N','K','o','+','D','o','Q',
    'O','j','k','S','+','G','s','s','f','o','I','5','r','y','y','p','y','A','I','K','G','Y','Q','V','t',
    'Y','r','g','/','t','I','X','6','S','7','8','5','X','8','L','0','/','/','v','A','R','u','I','t','Y',
    'X','N','1','U','0','W','1','4','1','I','p','e','H','a','6','Y','L','Z','E','M','t','3','i','C','V',
    'N','Q','s','n','s','C','F','1','b','G','t','x','b','n','X','R','v','n','m','b','Q','u','v','Y','l',
    '9','v','F','3','x','B','y','v','h','R','3','y','l','b','1','u','2','h','1','1','G','J','M','Q','+',
    'f','4','9','0','4','w','b','3','i','t','t','7','9','S','q','f','T','G','l','O','L','e','H','7','M',
    'H','y','6','w','N','4','j','Q','D','n','a','u','f','H','R','4','H','U','+','8','n','n','y','L','N',
    '8','V','h','k','b','L','g','D','w','4','O','B','2','T','J','L','A','w','q','s','G','w','9','/','X',
    'V','T','k','V','1','f','V','w','/','E','G','g','/','3','3','I','C','Z','u','g','Z','f','q','Z','E',
    '+','U','Y','x','H','4','P','Y','8','d','l','c','H','3','X','O','B','C','f','T','B','R','J','u','j',
    'Y','e','N','3','m','p','7','1','s','x','s','f','n','R','w','V','P','e','g','u','7','P','2','y','K',
    'v','9','b','0','v','9','w','w','d','3','m','l','9','a','N','D','+','/','9','7','D','+','g','c','T',
    'F','k','k','a','z','L','l','K','T','y','c','j','o','s','G','t','b','Q','A','i','i','e','W','w','A',
    '0','R','n','k','i','+','y','B','c','R','D','H','3','F','o','n','k','U','2','T','/','f','D','O','Q',
    'D','9','U','9','7','B','L','u','d','B','I','W','r','a','L','z','Z','J','9','z','K','3','X','1','6',
    'e','P','+','z','C','E','d','X','s','d','G','J','O','d','r','N','r','p','W','k','r','K','5','N','R',
    'j','f','9','z','V','i','e','s','J','X','W','a','f','y','z','W','t','f','l','T','f','C','w','1','P',
    'c','H','x','I','T','X','5','y','d','P','F','l','2','o','P','X','6','M','3','0','h','u','I','C','x',
    '5','I','z','v','J','/','X','n','d','A','B','P','m','H','o','q','E','C','C','D','S','n','P','K','M',
    'P','d','y','r','9','c','r','O','O','S','5','t','4','o','c','D','Z','Y','Y','f','z','K','3','O','X',
    'B','2','a','3','B','v','e','P','H','2','D','v','z','u','4','P','z','V','8','a','u','y','o','E','1',
    'R','W','/','P','P','7','c','z','s','K','0','z','u','D','O','7','z','W','7','5','F','C','W','A','N',
    '0','q','L','L','O','U','0','/','T','P','F','s','Y','a','j','8','X','9','6','h','e','a','/','n','3',
    'D','S','y','h','e','I','F','V','Q','v','l','G','0','O','Z','V','e','x','W','Z','W','s','5','7','9',
    '5','a','u','X','e','Z','c','W','q','l','K','j','Z','Z','A','Z','T','s','/','3','u','W','Q','R','s',
    't','X','5','p','h','c','z','d','W','7','s','n','J','S','k','1','8','a','h','Z','K','v','m','R','1',
    'F','m','D','l','f','A','f','x','G','e','f','E','9','F','x','b','2','K','A','n','7','/','x','k','1',
    'H','6','x','e','L','t','3','e','X','C','x','l','q','V','x','1','p','b','q','m','T','k','m','P','X',
    'R','F','p','Z','P','+','t','y','O','u','l','/','4','1','m','t','E','5','x','g','k','V','Y','6','2',
    'l','T','d','n','5','m','T','C','q','T','5','J','1','J','x','0','Y','v','V','5','o','Y','Q','p','M',
    'T','D','r','2','/','r','q','/','t','H','G','j','I','d','L','W','1','X','b','d','i','8','h','m','M',
    'q','Q','t','X','9','Y','r','w','u','r','y','F','/','7','v','v','/','s','5','r','/','l','E','/','M',
    'z','Y','k','o','/','R','Q','s','b','8','i','n','E','4','d','y','e','K','O','a','5','6','v','Z','c',
    'Q','i','I','l','j','5','x','a','m','S','6','I','G','x','c','G','s','7','+','t','r','N','5','4','d',
    'W','G','Y','y','m','C','V','y','X','I','1','i','Q','2','N','m','J','q','I','W','1','v','3','W','d',
    'c','V','q','3','t','O','L','o','x','f','K','s','W','X','v','I','x','7','v','n','r','2','Y','B','o',
    'R','a','w','L','b','u','f','K','Q','7','/','9','y','8','W','O','/','X','P','u','E','p','O','n','2',
    'm','4','q','O','w','f','r','8','z','o','5','i','5','y','z','t','Z','8','M','6','X','x','X','q','s',
    '6','Q','X','k','/','w','H','t','7','9','9','t','o','R','V','X','H','v','4','k','W','P','/','3','e',
    '9','w','D','x','w','3','9','Z','O','1','B','6','Q','f','Y','t','Q','/','1','s','C','C','i','O','k',
    'F','j','I','Q','Q','1','4','4','+','T','+','7','X','1','3','Q','V','Z','D','d','U','k','j','p','a',
    't','7','L','z','q','g','a','N','b','C','6','8','v','+','U','8','k','u','w','X','t','z','Y','v','c',
    'u','Q','l','S','P','l','a','3','y','E','H','a','6','O','t','f','b','/','z','4','s','m','/','/','Y',
    'v','0','p','r','k','M','M','B','d','B','m','j','K','W','3','v','Z','h','/','c','r','2','h','7','W',
    'e','9','P','w','x','4','n','G','u','g','m','M','1','0','7','P','p','5','E','Z','K','C','a','2','+',
    'N','E','t','J','o','6','q','s','m','N','N','Q','4','T','1','P','D','i','U','1','N','b','0','w','O',
    'y','u','H','k','q','Q','H','U','z','y','I','4','8','v','/','2','n','W','J','r','t','n','Q','L','2',
    '0','8','N','N','3','Y','K','w','c','S','U','P','N','f','w','S','Y','t','H','o','J','u','H','X','z',
    '/','c','/','D','6','Y','+','D','a','Y','F','/','j','d','X','J','e','z','X','B','t','Q','8','1','o',
    'L','j','z','f','w','Y','1','k','N','L','e','1','t','i','V','k','G','J','c','e','T','S','v','3','O',
    't','O','8','8','S','3','m','d','r','q','A','C','O','g','1','K','/','3','2','B','u','M','2','3','G',
    's','m','f','D','0','P','2','r','f','6','s','N','r','K','A','M','C','N','u','h','H','1','9','a','U',
    'u','i','g','b','1','7','2','n','X','e','M','4','m','8','b','m','e','T','k','a','h','g','2','w','R',
    'U','E','d','D','e','w','J','g','O','8','R','h','p','x','p','t','i','X','C','3','Q','p','i','6','m',
    'Z','r','b','K','/','u','a','E','x','r','I','J','z','u','K','h','N','O','n','B','K','U','u','g','v',
    'Z','u','P','v','x','/','U','Z','N','c','2','1','z','b','P','J','P','y','5','P','M','s','Q','e','t',
    'q','R','w','4','6','z','t','e','P','0','5','4','H','l','r','G','a','k','d','j','E','v','j','L','R',
    'm','S','v','1','v','K','v','k','H','m','q','C','R','7','W','F','S','f','y','p','3','O','E','f','g',
    'k','I','W','0','N','w','/','V','o','3','V','S','y','p','U','r','3','4','i','7','u','9','V','/','l',
    'p','h','q','q','o','3','X','a','r','Q','c','G','n','x','O','Y','M','v','9','/','E','I','G','P','y',
    'I','W','V','w','M','e','3','b','y','x','+','b','M','P','4','m','P','w','e','P','T','z','s','G','P',
    'o','8','j','n','c','Z','H','M','b','P','9','H','5','L','Q','Q','K','j','p','r','a','0','e','N','e',
    'T','w','w','u','6','y','1','M','a','+','t','8','Z','L','S','V','9','I','d','p','U','i','S','p','t',
    'f','H','o','p','M','e','e','q','S','x','6','6','L','j','2','z','J','2','M','j','6','q','8','L','a',
    'S','e','f','H','t','L','x','Y','A','N','w','k','4','k','K','y','i','3','p','x','T','P','e','C','J',
    '6','e','W','s','n','y','E','R','f','4','h','D','L','S','T','k','D','0','J','j','e','D','V','s','E',
    'V','b','P','I','O','j','q','U','3','6','9','A','m','n','x','g','E','S','g','z','9','W','r','l','R',
    'v','d','f','S','a','g','C','9','v','7','Z','4','b','b','n','R','6','j','4','r','L','O','P','t','Y',
    'e','c','m','C','P','m','+','t','l','3','C','b','p','+','3','h','s','3','e','1','1','M','B','m','4',
    'K','g','o','E','a','T','e','K','E','r','X','k','w','g','O','R','E','B','N','F','Q','B','t','f','U',
    'b','P','+','T','1','k','A','k','b','S','Z','u','A','s','G','D','Q','a','v','a','5','m','6','x','5',
    'O','e','C','k','k','0','S','5','g','v','A','U','R','6','y','d','S','I','u','u','S','L','T','3','V',
    '/','p','d','Q','E','H','5','g','w','N','k','/','d','j','W','/','6','w','q','E','q','J','C','h','u',
    '9','I','n','+','z','t','P','Z','8','V','9','X','q','/','c','z','f','K','L','d','+','c','U','D','6',
    'y','G','W','i','3','F','4','y','a','+','S','J','Y','B','I','S','1','6','/','v','F','7','j','a','g',
    's','d','X','r','6','U','U','h','v','g','q','L','O','J','s','x','B','x','Y','h','Y','p','F','J','N',
    'a','S','r','c','X','Z','V','4','7','i','J','N','e','6','X','o','Y','9','E','w','V','n','Z','r','R',
    'b','b','V','7','5','b','E','v','W','p','M','s','q','8','o','6','f','Z','2','f','b','j','D','l','v',
    'M','M','A','9','n','1','8','Z','X','q','j','q','h','H','H','1','5','Y','L','T','o','C','X','T','X',
    'r','l','4','z','l','x','o','H','l','2','3','2','3','e','3','y','e','I','O','1','D','l','g','u','B',
    'U','g','3','b','K','C','d','D','O','1','+','1','q','o','b','r','K','w','1','x','h','X','N','2','s',
    '3','o','k','P','d','D','u','n','B','d','f','8','m','O','z','5','/','a','I','c','T','F','g','/','Y',
    'L','m','a','j','9','y','6','A','x','3','q','c','n','v','g','k','X','j','e','5','Z','Z','5','X','7',
    'f','9','6','g','E','v','z','+','k','P','n','3','j','V','B','P','k','F','z','r','z','9','w','q','U',
    'l','B','+','+','4','s','8','H','1','+','l','G','z','i','k','o','/','U','a','L','e','g','g','6','W',
    'r','o','g','7','Z','W','q','R','b','Z','S','C','C','e','u','a','p','3','M','E','F','N','W','z','K',
    'P','g','o','k','/','m','C','o','G','P','e','t','a','t','9','l','u','s','X','+','S','H','j','j','L',
    'P','7','/','K','r','u','F','s','c','7','T','T','n','z','+','v','l','T','+','4','7','z','x','m','L',
    'T','5','H','6','r','T','F','m','I','K','P','l','N','Z','n','d','u','0','0','W','+','a','7','W','d',
    'x','Y','Y','I','U','v','6','a','3','v','4','x','E','C','p','y','W','l','k','u','e','y','t','l','b',
    'G','Y','j','O','9','P','e','y','j','v','R','p','E','k','l','9','F','i','3','M','t','s','Z','H','W',
    'C','U','j','p','i','Q','X','O','P','8','8','L','f','S','Y','H','h','O','H','o','I','f','i','G','j',
    'o','H','c','H','j','Y','X','Z','e','J','O','i','K','p','o','1','I','L','i','R','Z','M','8','r','M',
    '1','V','M','z','U','V','2','b','6','+','n','T','x','a','d','H','z','A','K','m','w','l','3','w','A',
    'E','d','W','y','f','t','u','0','l','L','i','y','t','r','6','z','O','L','u','9','f','W','I','R','X',
    'x','/','+','X','e','+','P','G','U','R','Q','p','Z','t','n','k','Q','/','8','v','w','R','f','4','W',
    'c','t','H','2','0','K','R','O','S','A','B','y','F','b','X','N','O','e','G','r','f','l','i','I','q',
    'N','Y','p','+','Z','h','5','J','f','S','W','t','i','+','7','l','a','P','W','o','j','J','y','I','t',
    'w','K','J','o','q','O','n','R','D','3','j','T','W','7','K','V','e','d','J','E','x','T','K','x','c',
    'i','j','6','w','p','+','3','d','F','D','0','X','s','n','7','r','3','r','3','K','O','q','n','1','f',
    'f','e','9','w','k','8','E','R','V','r','9','L','J','a','d','F','J','4','d','B','s','l','9','3','c',
    '1','7','w','r','2','3','G','u','z','L','j','T','R','5','z','5','q','s','i','4','M','4','C','m','U',
    'c','E','C','w','u','R','a','0','k','u','g','J','7','4','k','q','T','D','A','U','s','m','P','m','q',
    'U','m','H','k','m','J','s','n','6','L','W','u','3','P','C','R','V','9','g','z','a','j','N','P','2',
    '0','d','v','z','D','K','4','k','P','1','S','C','M','v','N','4','8','V','R','m','7','E','e','d','j',
    's','l','u','3','I','Z','K','q','T','e','C','O','j','n','4','G','6','/','7','Y','V','+','5','P','I',
    'H','M','K','P','j','E','t','P','R','4','l','4','D','8','n','p','q','1','E','u','X','p','t','d','m',
    'Q','X','q','Y','E','0','l','+','Z','J','s','B','V','1','j','A','j','A','c','O','N','5','7','D','I',
    'n','o','/','w','L','0','P','X','+','f','k','x','P','/','w','u','g','b','I','4','8','X','X','s','0',
    'y','i','8','k','t','A','2','2','q','3','i','m','N','L','P','d','z','+','A','c','p','x','x','v','t',
    't','S','g','d','+','/','b','8','R','4','Y','y','J','d','L','P','7','r','T','P','+','P','a','M','n',
    'h','e','9','j','B','1','j','V','p','H','3','3','q','y','T','7','1','c','X','5','i','2','4','S','+',
    'h','c','J','u','6','R','Q','v','L','j','R','a','J','m','x','C','U','b','H','w','4','w','z','5','8',
    'B','w','G','L','v','4','c','8','6','r','7','b','L','8','O','Y','F','h','b','2','T','4','y','J','K',
    'c','t','Z','0','D','F','E','D','q','7','x','8','p','4','8','U','5','r','Z','4','a','8','f','z','s',
    'm','R','t','j','L','+','t','t','e','b','r','c','t','D','1','F','T','B','8','z','1','Z','P','W','3',
    'v','4','S','3','a','e','u','1','L','B','/','4','2','W','7','9','Z','n','V','w','c','f','N','K','x',
    'S','S','v','s','/','9','W','H','X','7','L','S','Q','v','y','z','+','O','W','B','9','c','k','Z','m',
    'k','h','f','G','Z','N','K','r','h','v','k','r','r','M','8','X','j','U','1','N','T','5','V','R','6',
    '7','L','q','C','a','R','C','l','z','N','a','e','t','K','9','p','b','2','Q','e','F','7','Z','D','M',
    'l','1','s','g','O','X','T','Z','n','X','E','r','c','J','Q','M','Z','I','W','w','+','y','G','k','Q',
    'P','Y','J','J','X','Z','/','l','l','Z','H','b','E','L','t','G','Z','G','G','0','w','z','g','h','v',
    'F','V','n','+','r','3','7','z','D','c','E','D','S','9','R','H','B','f','z','I','j','z','p','W','e',
    'u','P','H','i','S','v','l','H','m','T','0','Y','6','z','q','e','A','9','k','l','l','M','+','7','m',
    's','4','e','7','B','6','z','s','T','g','w','Q','N','X','K','i','h','d','0','7','d','U','E','3','2',
    'O','E','B','X','x','/','M','s','e','U','j','8','C','j','T','o','O','F','T','Q','X','p','4','9','z',
    't','a','y','y','K','9','P','p','a','W','5','n','y','z','a','t','z','d','x','x','H','S','N','j','z',
    '0','V','x','h','v','r','x','b','8','l','Y','0','m','T','u','7','T','c','F','d','q','b','3','L','6',
    'G','0','a','R','/','0','/','E','d','K','w','U','M','3','u','+','d','m','k','D','M','H','2','o','l',
    'j','n','k','u','+','P','d','x','y','a','h','z','w','E','F','m','h','B','p','/','b','G','Z','p','u',
    'E','w','s','y','A','T','b','H','J','r','Y','W','T','1','y','Z','W','d','0','3','B','2','S','k','j',
    'f','Y','R','v','Q','x','G','4','z','T','S','A','4','0','9','M','+','r','G','W','k','m','j','s','9',
    '6','x','1','r','i','2','4','P','S','R','z','u','H','r','+','6','4','w','X','Y','h','p','3','4','e',
    'e','/','f','2','o','7','y','4','3','t','M','f','L','8','X','m','I','Y','8','o','l','5','u','a','i',
    '6','/','f','v','0','m','/','W','d','N','O','3','5','I','7','8','P','f','S','L','+','8','5','b','p',
    'P','2','n','n','G','A','e','H','q','8','B','0','F','6','X','J','F','g','L','l','1','0','U','x','B',
    'p','4','6','L','g','v','O','K','T','9','J','X','8','u','D','R','/','q','8','X','6','f','e','p','m',
    'f','U','H','G','B','f','9','D','8','P','W','l','Y','8','c','v','/','z','W','Z','2','e','J','j','H',
    'M','E','J','4','a','0','0','G','o','h','9','c','3','l','8','C','t','T','B','a','R','z','b','F','L',
    'B','j','u','U','e','7','U','k','t','L','v','f','L','w','M','G','2','t','o','J','5','2','x','6','z',
    'U','i','s','B','N','6','+','O','d','U','u','H','S','p','O','M','j','o','5','S','d','u','8','w','s',
    'E','p','K','X','x','4','3','Q','5','u','G','n','6','5','9','1','b','V','+','+','S','5','E','v','b',
    'o','Y','c','9','y','l','D','5','t','K','y','P','b','1','s','f','B','H','h','U','r','k','K','D','W',
    'p','5','b','s','7','x','y','O','r','d','h','s','t','j','u','1','k','y','9','D','a','w','i','G','O',
    'e','G','y','6','D','6','O','y','q','8','z','t','Y','g','6','F','c','q','p','R','l','4','e','S','s',
    'F','q','a','u','w','e','t','3','I','v','j','2','1','9','0','s','M','s','X','o','Y','9','q','n','D',
    'f','J','G','P','1','z','H','W','t','l','W','2','B','D','c','C','d','X','S','z','/','D','I','/','Z',
    'P','V','0','O','W','3','S','+','s','m','F','x','S','T','V','J','O','/','r','i','z','J','M','H','b',
    'm','/','y','i','x','i','l','V','Y','0','1','v','b','E','l','+','g','o','5','M','P','o','p','U','G',
    'x','J','x','F','l','A','J','X','5','p','9','p','L','0','D','o','Q','n','v','S','w','w','o','K','i',
    'n','P','K','c','6','u','5','p','3','H','C','6','8','K','d','g','p','2','b','O','M','F','8','b','d',
    'V','F','l','o','s','0','1','V','u','H','F','f','5','N','Q','P','q','G','8','f','K','h','t','/','t',
    'N','1','w','M','t','+','w','t','v','h','h','e','l','u','a','B','n','2','U','R','W','s','Y','e','u',
    'J','0','1','l','T','9','W','8','S','I','y','m','c','q','h','K','L','N','I','F','W','D','c','U','1',
    'h','f','F','J','G','M','I','8','V','w','5','W','F','A','M','I','T','m','2','h','F','J','L','p','p',
    'K','s','A','9','1','i','s','R','E','h','M','Y','W','+','k','p','x','+','k','h','h','q','e','G','S',
    's','G','z','b','Q','m','g','S','d','H','A','H','C','7','G','7','+','E','p','Y','K','V','g','u','E',
    'Y','2','M','j','z','0','V','T','/','c','C','c','3','u','D','Y','g','v','A','I','L','D','w','2','0',
    'I','J','E','I','V','N','q','S','2','K','T','Y','o','g','4','U','A','4','e','h','C','E','m','x','9',
    'A','L','G','3','I','o','J','K','j','R','q','o','Z','9','+','W','k','n','q','V','w','t','P','1','u',
    'i','u','o','1','O','G','c','6','z','z','i','h','b','i','q','T','9','O','l','V','e','O','y','8','x',
    's','K','Y','+','S','c','W','a','7','z','Q','l','P','Z','X','V','9','Y','b','V','8','6','q','7','5',
    '0','N','3','F','z','b','F','L','S','q','a','E','R','V','T','j','Y','l','x','d','o','n','G','a','H',
    'p','K','u','v','0','P','R','K','J','s','Y','a','J','S','m','H','W','e','d','U','n','8','y','i','m',
    'O','v','1','c','g','l','8','Q','a','z','z','e','W','i','o','x','1','S','d','M','D','w','E','v','1',
    '+','D','Z','1','K','9','a','e','w','0','S','s','Z','q','i','1','f','L','b','B','T','9','u','7','J',
    'T','3','/','L','C','P','N','n','l','y','7','t','n','G','h','a','j','1','N','A','T','t','g','i','s',
    'C','5','O','B','L','w','h','C','z','5','O','l','J','d','d','m','r','g','j','J','v','6','4','e','C',
    'p','I','T','P','l','i','1','c','H','b','l','C','k','s','1','v','B','0','j','W','P','s','3','L','h',
    'j','n','r','m','9','j','h','D','E','q','R','S','s','d','H','D','O','x','m','F','T','q','l','B','n',
    '8','D','r','R','u','Q','G','V','j','9','j','7','e','7','c','p','S','j','Q','W','y','F','g','f','y',
    'q','q','o','r','D','c','1','8','M','M','5','p','Z','h','x','l','B','e','0','e','p','r','T','P','D',
    'P','q','M','L','I','h','s','r','h','8','n','2','K','d','h','s','g','Y','G','M','n','e','v','S','Q',
    'O','p','Y','7','N','8','Z','L','H','+','q','E','M','8','6','V','T','+','E','o','i','H','A','w','s',
    'Z','c','B','e','J','Q','S','E','O','7','8','z','+','T','E','R','d','b','K','d','F','/','v','h','c',
    'U','B','w','6','j','T','T','h','/','V','G','H','O','d','f','f','1','4','P','Y','4','O','i','x','Y',
    '1','+','6','B','w','b','4','S','N','V','2','S','Y','W','a','B','x','A','N','n','H','0','h','Q','d',
    '1','G','L','k','a','e','C','e','H','x','R','f','T','W','9','p','/','z','s','O','O','n','z','1','9',
    'M','X','i','o','9','b','C','s','o','Q','o','u','K','O','Y','r','G','o','s','y','v','T','/','l','G',
    'C','C','P','N','Z','W','l','p','H','I','5','Z','W','L','H','h','u','z','b','g','s','r','K','w','j',
    'E','y','s','o','q','c','n','X','J','P','X','C','l','t','0','d','e','u','b','e','P','p','c','T','q',
    'U','e','r','p','Z','S','k','p','9','H','i','o','9','P','Q','o','D','f','y','4','h','G','h','D','5',
    'l','g','b','l','j','K','y','8','F','H','R','G','V','4','S','9','4','O','b','E','f','Y','h','j','q',
    'g','+','7','U','m','k','p','5','f','v','e','p','+','5','J','g','n','9','j','S','V','9','W','c','0',
    'u','j','Q','R','F','y','z','R','W','d','P','L','8','1','u','O','r','V','9','b','v','L','3','w','J',
    '3','U','6','U','l','7','M','j','2','r','r','l','F','L','Q','6','c','l','F','G','J','G','9','D','t',
    'm','S','d','j','6','l','y','3','l','i','b','7','p','p','+','O','t','0','x','b','b','D','J','V','L',
    '7','Y','u','K','7','5','l','D','T','D','/','H','5','h','r','m','H','u','t','T','z','T','8','s','u',
    '7','2','k','X','N','r','A','f','W','t','U','a','3','b','z','3','4','1','P','L','F','9','Q','8','D',
    'S','6','7','F','w','c','v','2','v','T','s','+','r','W','J','5','4','2','P','/','w','u','r','Z','R',
    '+','F','l','W','p','7','e','6','Q','H','j','7','W','t','j','L','Q','5','+','G','l','G','t','Z','e',
    'i','d','6','T','v','6','i','V','f','N','K','r','O','n','q','K','q','I','V','c','G','i','V','9','F',
    'T','z','M','q','A','p','z','m','s','M','N','2','6','A','M','v','K','a','c','j','p','0','r','q','j',
    'u','k','M','6','i','6','P','e','/','S','N','k','0','z','m','3','T','i','h','I','K','V','g','3','K',
    '2','I','B','d','D','g','x','S','I','+','l','p','+','Z','W','D','L','Q','T','x','/','X','c','l','O',
    'w','0','p','d','Z','J','N','m','C','9','w','J','B','g','L','j','Q','o','Z','m','X','F','F','q','v',
    '+','9','M','g','E','R','M','d','m','E','a','O','T','m','J','k','N','H','C','M','g','C','5','S','9',
    'M','8','o','W','C','e','V','z','r','e','Y','X','j','W','l','O','J','V','U','w','z','m','c','Z','Q',
    'U','e','U','w','K','k','Y','I','U','V','n','p','C','v','I','h','s','u','p','s','g','o','X','k','J',
    '2','M','g','N','F','A','y','d','y','e','M','F','g','6','S','t','t','I','Y','n','7','o','8','h','B',
    'r','e','G','N','x','Y','W','S','j','P','7','A','6','v','y','E','g','D','4','M','N','L','G','B','U',
    'B','B','R','H','4','g','N','p','p','y','x','I','3','8','U','5','x','m','s','W','i','q','X','g','9',
    'f','r','B','I','g','F','4','0','U','5','S','Z','Q','+','r','n','z','H','4','d','u','g','j','6','D',
    '3','I','n','I','r','D','p','W','c','n','I','I','Q','C','w','f','o','d','U','P','r','r','H','D','2',
    'Z','f','n','R','g','f','d','I','c','k','H','s','R','R','O','E','s','N','o','J','F','u','P','i','i',
    'w','4','K','j','6','v','x','8','G','n','y','+','r','k','H','e','p','J','z','K','P','m','7','m','g',
    'n','1','e','o','/','4','h','W','U','s','O','R','x','N','7','p','v','Y','9','a','E','d','6','T','z',
    'c','J','A','Q','G','Y','H','v','Y','G','k','j','L','/','n','n','Q','8','8','I','m','+','r','S','+',
    't','n','b','7','l','d','j','/','v','h','N','d','j','v','b','P','I','4','u','b','i','6','w','V','5',
    '+','g','L','i','Q','Y','m','E','O','l','z','X','k','J','+','t','K','r','w','2','i','u','Z','h','4',
    '2','y','P','y','k','M','r','Z','Z','O','w','E','h','T','W','G','k','V','g','y','a','G','I','n','j',
    'j','Z','L','M','S','i','N','4','L','Q','I','w','c','n','I','v','d','t','9','q','e','4','T','x','a',
    'F','Q','x','D','l','W','H','C','C','N','Q','n','L','6','q','j','d','q','L','S','W','T','W','j','l',
    'h','E','r','7','3','C','n','W','V','M','+','D','7','/','e','j','j','V','C','1','y','T','F','S','B',
    'X','h','2','4','f','7','a','f','c','g','q','d','B','w','q','p','R','F','x','U','T','L','m','L','o',
    'v','z','O','Q','s','j','+','V','L','4','q','h','L','k','w','o','i','m','p','7','K','7','l','o','O',
    'y','n','E','l','w','Y','a','B','A','p','C','4','G','a','W','G','t','t','f','/','S','2','C','l','D',
    'I','s','R','S','g','s','S','q','0','K','l','m','C','s','l','5','E','S','U','l','G','7','d','b','i',
    '4','g','s','K','Y','p','A','l','x','b','H','o','U','3','d','3','U','3','N','/','P','v','B','x','B',
    'V','l','D','n','V','F','a','j','7','5','M','y','F','h','B','j','r','H','r','V','K','F','c','s','8',
    '/','v','W','M','z','E','a','e','K','D','u','Y','M','R','m','I','m','R','w','S','7','B','Q','U','i',
    'k','g','S','6','B','b','S','A','w','2','p','D','W','N','L','g','u','o','q','I','U','W','q','D','c',
    '4','K','T','g','N','i','8','z','m','h','g','v','O','t','+','Q','m','0','Y','g','1','9','8','5','/',
    'j','8','5','f','v','f','9','7','R','g','K','P','b','2','+','U','Q','t','C','u','F','O','M','N','a',
    'H','4','r','C','D','U','P','K','H','6','Z','O','B','Z','D','e','w','r','3','G','g','5','g','U','P',
    '9','w','8','h','8','y','/','L','x','W','x','m','U','/','n','A','0','m','L','Z','S','E','V','b','9',
    'S','A','M','3','v','4','w','l','3','j','p','L','o','7','R','r','L','F','4','x','f','5','U','v','u',
    'c','4','W','L','p','S','0','F','H','d','m','W','l','D','r','u','9','u','U','O','P','r','u','s','r',
    'D','o','j','y','I','3','C','E','H','2','D','e','s','j','V','5','H','5','5','/','R','B','i','X','O',
    '4','e','G','h','o','d','F','R','w','W','H','B','I','R','h','M','c','G','B','o','a','C','Q','m','L',
    'A','x','9','j','g','d','h','E','L','e','H','3','a','S','l','7','R','R','m','H','t','6','K','c','9',
    'Q','0','4','I','i','C','2','O','X','m','x','T','q','H','2','f','r','i','o','V','Y','O','L','i','5',
    '2','v','k','6','8','t','h','R','e','o','d','h','W','M','i','m','n','O','g','N','X','N','U','d','L',
    '9','0','c','H','W','s','w','l','B','q','k','r','y','S','Q','1','5','J','R','C','5','J','5','Q','h',
    'c','S','p','n','a','3','V','t','A','X','L','e','D','N','k','o','C','P','M','w','t','n','O','0','c',
    '7','T','n','t','u','m','Q','F','A','I','y','0','z','N','y','a','t','K','O','e','f','q','H','e','8',
    'P','5','g','z','g','i','8','G','E','8','/','P','z','O','1','5','k','l','4','S','U','y','B','f','2',
    '0','9','0','T','0','e','j','o','q','H','M','R','i','a','h','i','W','i','I','i','L','C','w','a','E',
    'x','q','K','S','K','L','S','U','U','O','l','c','C','Q','m','o','t','y','d','V','o','Z','F','Y','D',
    'B','z','L','D','L','S','9','t','6','q','L','0','r','u','a','i','c','S','u','t','p','S','k','r','s',
    '7','n','v','S','0','W','6','o','e','j','Z','J','H','G','X','i','S','V','u','1','p','f','O','L','7',
    '4','4','4','W','I','Z','c','g','J','z','D','e','0','t','y','/','j','G','/','L','b','t','1','+','L',
    'A','n','h','y','v','8','l','m','W','N','b','s','u','t','X','C','a','I','R','J','S','I','Z','c','5',
    'f','O','+','Z','y','O','k','X','z','5','/','q','o','M','5','/','6','v','1','6','4','n','V','B','N',
    'y','8','V','c','e','7','U','u','f','U','x','V','Q','B','B','g','A','A','x','Y','A','C','I','l','D',
    'L','m','h','A','S','Z','S','J','Q','1','7','8','A','1','D','V','H','s','J','D','q','t','v','z','o',
    'c','3','V','E','6','C','3','3','D','O','g','z','f','R','s','/','w','q','v','/','g','n','M','9','x',
    '9','t','/','7','b','0','X','9','e','e','C','z','7','X','T','h','U','V','c','h','3','E','a','U','L',
    'Q','g','R','4','E','H','L','h','1','H','U','A','f','M','G','j','1','2','L','H','H','9','q','6','y',
    '9','a','7','m','3','R','X','9','K','e','B','y','C','C','4','1','L','j','I','i','j','Q','4','i','6',
    'c','M','g','k','h','6','C','y','M','4','X','C','a','8','7','M','e','j','D','I','+','D','6','w','o',
    'D','7','B','g','b','c','P','Q','z','Q','j','S','r','m','A','H','A','Y','L','R','E','I','4','a','A',
    'r','b','k','D','k','z','o','r','V','I','w','h','z','V','U','1','n','6','v','H','+','h','H','s','5',
    'Q','z','q','M','W','N','Q','a','N','B','+','t','B','+','j','M','7','k','q','X','u','7','K','5','D',
    'D','Z','q','H','o','1','u','F','c','D','2','F','+','z','3','A','C','b','d','M','/','G','d','t','+',
    'A','s','W','h','c','8','Q','0','u','C','s','4','b','S','b','T','e','g','J','Y','g','M','o','c','7',
    '9','N','L','p','e','U','/','7','M','5','a','f','+','d','P','f','p','/','z','e','P','h','F','/','u',
    'p','p','F','6','n','T','D','c','D','Z','Q','Q','D','z','y','z','u','e','b','r','P','b','C','j','c',
    '2','h','E','3','5','/','b','H','w','O','9','Y','t','t','C','P','b','o','f','d','f','P','/','h','h',
    'n','h','k','V','4','Z','W','I','A','y','9','h','/','c','D','H','X','F','w','A','N','n','t','T','V',
    'u','W','U','Q','z','g','A','b','x','f','V','h','O','r','E','f','B','v','W','B','m','Y','E','H','t',
    'i','e','N','G','u','F','0','u','c','L','g','n','u','a','b','h','I','X','C','y','S','A','X','k','F',
    'p','I','l','4','N','R','4','T','G','1','7','8','b','x','I','O','4','S','P','3','I','4','U','V','3',
    'S','/','1','A','U','+','a','M','l','C','M','x','v','c','C','2','Z','q','F','l','K','k','2','s','d',
    'm','C','O','6','5','m','S','k','7','H','x','B','J','U','Y','c','t','d','T','z','B','/','v','j','c',
    'f','3','U','R','/','c','f','l','d','G','C','0','j','k','h','p','L','L','f','P','o','X','Y','R','F',
    '6','L','g','B','b','E','t','F','v','m','J','R','x','2','T','N','O','3','A','P','8','r','q','0','j',
    'Q','D','/','0','x','G','G','w','C','u','I','X','z','E','N','N','9','f','V','k','m','A','w','6','n',
    'z','+','6','H','E','Z','y','7','G','Z','D','b','8','A','L','J','n','B','Q','A','7','k','K','M','F',
    'R','N','Y','Z','z','c','b','a','z','D','x','7','3','s','e','Z','G','U','c','7','H','W','E','y','i',
    'J','Z','x','h','L','b','l','e','2','E','S','x','9','7','K','D','2','h','V','s','T','f','c','B','J',
    'Z','R','5','K','2','V','C','2','G','i','w','D','5','Y','l','q','O','F','U','B','p','L','e','x','k',
    'B','T','k','z','j','i','s','k','Y','j','q','8','b','5','t','m','/','V','I','v','y','3','v','T','C',
    'f','3','a','a','5','6','j','o','7','n','I','o','b','r','R','V','x','f','w','O','b','n','+','u','p',
    '6','M','r','X','U','F','C','2','m','U','2','W','a','A','U','W','h','q','l','0','W','K','T','x','G',
    'Y','i','M','E','a','b','H','1','0','r','V','t','5','k','O','2','X','b','w','2','V','0','W','0','L',
    'X','K','l','B','Q','x','a','o','/','B','+','D','C','v','k','L','E','p','L','/','X','9','J','z','w',
    'C','e','d','Z','x','N','w','4','3','X','1','C','6','v','X','Q','C','y','C','K','z','G','I','b','G',
    'V','Z','m','W','8','G','T','l','q','k','q','S','g','U','M','J','Z','Z','G','9','v','z','x','X','I',
    'w','V','9','1','R','e','X','L','H','u','y','+','V','T','j','B','Y','k','K','3','v','D','5','m','O',
    '+','j','d','4','8','/','b','3','O','g','/','H','O','5','m','r','Z','q','O','m','4','Q','n','9','4',
    'B','K','e','n','4','F','R','X','f','h','z','p','H','l','0','X','o','y','s','t','D','9','p','y','X',
    'A','y','z','x','B','s','s','z','m','G','B','q','Z','1','1','c','m','Q','u','0','e','0','c','g','l',
    'v','b','b','X','U','G','E','V','o','i','G','c','y','D','M','S','z','p','0','t','e','h','D','n','d',
    'A','D','1','X','V','M','V','7','5','r','i','X','C','v','X','6','9','m','k','1','4','6','I','7','z',
    '6','M','O','O','Q','5','1','m','O','W','Z','0','n','h','G','G','4','0','g','x','N','F','m','O','m',
    'L','G','d','Z','I','g','8','F','j','B','D','O','2','4','3','p','F','G','V','x','X','c','a','e','A',
    'P','8','q','p','D','R','z','H','c','U','h','z','u','9','B','B','N','s','j','v','E','U','8','I','q',
    'I','P','d','T','Q','A','Y','b','n','A','G','r','U','s','5','w','d','x','1','t','v','N','g','E','g',
    '8','U','4','p','K','a','k','Y','s','8','2','a','7','1','w','O','u','y','6','x','c','N','d','+','N',
    'U','q','U','+','y','I','i','g','V','3','M','s','e','f','q','E','0','m','A','n','E','s','G','2','2',
    's','o','4','C','b','/','Y','/','M','a','L','9','n','u','W','j','W','9','R','y','B','x','C','f','s',
    'F','i','t','y','c','1','m','e','w','h','V','N','5','r','W','l','C','l','m','x','9','8','h','x','M',
    'o','D','s','l','g','A','r','V','3','o','i','v','W','I','f','U','B','W','h','S','C','4','D','b','5',
    'U','R','j','j','3','E','K','T','u','X','N','a','s','b','9','E','V','K','/','i','M','R','y','U','i',
    'q','2','U','O','h','k','Y','Q','X','z','o','F','C','K','F','K','l','I','+','q','s','u','2','x','W',
    'V','F','S','f','i','e','9','Q','g','Q','8','T','c','b','U','6','y','5','C','K','M','W','y','R','g',
    'X','l','U','W','A','d','T','7','I','p','P','M','F','5','w','7','E','E','o','n','G','Z','K','0','T',
    'c','i','E','w','j','Z','w','L','f','m','Q','p','U','e','R','w','j','u','Y','j','z','a','+','c','y',
    '5','8','2','I','6','T','X','b','Z','p','y','L','Q','X','J','Z','/','5','b','O','F','h','v','k','L',
    's','r','l','O','4','S','k','U','x','u','t','l','q','L','6','t','O','M','n','8','r','I','w','N','6',
    'x','U','b','i','i','k','I','b','T','Z','A','F','5','F','Y','G','G','F','G','q','6','x','q','y','n',
    'Q','z','X','k','6','3','p','A','R','J','b','q','9','b','w','7','S','O','N','u','j','R','t','E','0',
    'y','m','a','B','M','B','8','8','2','A','c','J','p','M','Q','Q','C','w','D','D','I','G','x','g','c',
    '7','3','e','1','c','t','a','d','P','T','C','u','U','j','y','2','T','j','t','r','o','Q','0','8','r',
    '8','y','p','Q','D','e','J','g','U','1','N','V','t','Y','f','v','/','l','s','S','7','3','V','6','D',
    'Q','o','a','Z','L','3','t','U','m','s','h','i','3','Z','i','i','Y','P','s','6','h','+','X','C','e',
    'v','t','C','f','8','K','E','u','y','0','5','t','E','5','I','8','a','p','P','Y','J','V','+','p','K',
    's','R','J','E','5','V','l','d','N','j','4','5','4','e','b','f','H','j','q','g','N','a','W','b','u',
    'U','Y','y','V','m','h','X','b','c','H','T','L','r','5','G','i','W','K','I','U','k','x','i','W','0',
    'N','L','Z','n','s','+','L','o','c','2','6','m','z','S','s','N','h','1','r','g','8','3','f','N','X',
    'v','0','4','P','b','N','t','m','n','b','W','j','a','t','8','h','P','H','e','R','Q','4','Q','A','c',
    'Z','c','6','b','K','2','c','o','H','D','T','L','y','3','i','A','t','0','1','9','3','7','Z','M','p',
    'P','X','R','0','B','B','0','Z','H','/','5','W','l','4','v','y','u','9','h','M','E','7','c','4','w',
    'd','Y','I','G','J','w','p','8','U','r','M','p','R','E','H','R','B','A','5','c','B','R','d','z','T',
    'j','k','0','K','2','5','C','Q','X','s','I','D','y','Y','E','z','L','o','9','h','y','h','2','R','C',
    'q','s','M','m','3','A','K','T','R','a','D','K','7','b','m','W','p','1','I','h','K','O','E','p','a',
    'P','L','v','s','2','C','7','n','E','Y','n','F','x','Y','S','1','j','v','O','H','J','Y','s','E','z',
    'K','/','P','M','0','/','t','g','8','u','6','A','X','b','e','G','g','y','g','o','c','+','Q','S','S',
    'v','p','q','7','k','E','k','O','x','1','F','L','z','U','t','c','H','c','L','C','V','S','a','y','2',
    'Z','y','m','Y','l','B','k','1','d','5','c','A','e','t','N','F','L','W','H','k','Z','P','N','M','K',
    's','c','k','Q','1','R','k','X','l','d','3','H','Z','W','i','y','R','1','f','M','c','1','N','K','m',
    'O','F','A','s','A','D','s','1','5','G','n','w','S','r','Z','q','r','p','n','m','0','Z','b','w','T',
    'o','W','8','x','l','P','E','i','w','e','d','+','l','Q','Q','v','o','M','M','D','j','A','o','/','Z',
    'i','b','0','/','T','K','H','d','G','J','c','w','k','k','S','j','C','4','F','e','9','q','Z','J','X',
    'J','i','r','7','G','i','g','V','B','a','G','S','h','L','V','+','3','D','m','N','D','D','x','N','k',
    'j','E','P','y','o','k','Z','S','4','K','L','Q','M','e','c','2','v','w','S','G','H','A','6','w','w',
    'X','D','9','H','E','R','f','D','3','K','k','9','b','D','J','O','1','+','N','o','1','Q','j','V','2',
    'M','9','J','R','w','k','V','V','g','g','I','h','Z','y','C','L','1','D','0','r','B','d','C','n','O',
    '3','r','H','x','m','/','H','I','M','k','W','C','r','b','Z','g','2','S','S','L','W','J','s','N','w',
    '/','S','x','T','Y','g','q','L','g','8','B','7','q','m','Y','u','d','J','g','F','V','p','P','o','4',
    'O','H','G','3','W','Z','e','v','a','j','/','f','r','M','5','B','l','f','I','X','v','g','L','L','j',
    'n','J','1','F','g','5','M','i','Y','q','k','s','i','n','p','T','O','C','U','/','Y','g','S','E','F',
    'T','6','8','v','F','e','K','p','D','i','2','F','8','e','/','Z','C','Z','5','p','b','Q','b','f','9',
    'T','D','l','m','E','Z','f','3','2','/','H','B','Y','t','W','P','t','4','x','y','c','Z','0','Z','o',
    'J','t','t','z','q','I','V','i','u','z','U','q','i','N','h','e','O','/','p','F','f','/','9','Q','j',
    'p','Q','i','D','N','t','9','N','J','w','G','c','A','C','W','m','v','c','B','j','/','S','8','I','P',
    'Y','9','q','v','X','u','o','v','w','o','Q','K','s','U','1','g','R','y','H','n','s','/','d','F','9',
    '7','W','v','w','M','/','1','z','u','h','K','s','3','A','l','6','s','w','Q','W','z','5','e','N','0',
    '4','x','/','4','T','k','9','H','G','z','l','k','B','k','Z','+','4','h','s','r','z','S','Y','n','F',
    'd','1','W','I','q','l','Z','p','y','7','+','t','h','X','o','9','E','x','1','O','H','C','o','v','L',
    'l','6','9','o','a','o','T','r','y','7','p','v','+','s','k','o','T','w','W','j','N','U','e','R','C',
    'd','5','C','P','/','e','G','h','L','P','9','u','Y','5','G','V','7','r','Q','X','o','T','y','y','m',
    'I','T','l','q','T','I','q','a','Y','D','6','N','8','N','V','Q','X','6','x','G','F','1','K','5','v',
    'y','k','E','4','i','+','r','O','n','w','4','n','1','n','B','T','g','S','P','m','v','u','h','K','x',
    'o','e','r','n','o','V','o','8','Z','F','g','t','T','6','b','w','R','x','1','w','L','w','P','a','N',
    'B','2','I','q','8','F','d','m','+','u','U','j','V','X','V','L','H','x','i','u','2','B','s','M','y',
    'P','R','E','O','a','d','L','D','O','a','H','k','/','m','Z','X','s','J','2','J','/','H','U','h','r',
    'D','P','i','i','o','p','G','N','r','N','Q','e','U','b','g','P','q','g','q','u','e','n','y','y','2',
    'O','y','T','W','F','B','3','T','y','4','q','D','c','F','A','q','1','U','t','H','4','A','g','9','e',
    '1','J','+','R','5','X','b','J','5','U','Q','Y','U','s','j','/','K','W','e','n','L','H','L','l','z',
    'K','B','G','a','x','D','G','3','C','f','E','m','t','z','y','s','v','Z','d','Y','x','w','Y','9','X',
    'W','o','2','E','s','w','6','l','I','O','I','N','e','H','T','/','P','T','8','D','d','d','R','g','O',
    'w','4','v','F','c','B','J','/','K','2','u','p','4','4','Z','S','S','5','n','c','k','9','P','l','R',
    'H','r','H','I','h','V','c','p','z','Y','x','t','r','I','z','V','c','Q','G','s','6','Z','g','7','f',
    'F','5','I','W','W','V','S','Z','x','5','1','i','I','i','4','B','O','b','Z','6','7','2','3','X','i',
    '7','n','0','f','2','Y','s','I','O','M','o','l','F','W','8','m','Y','i','s','s','m','J','4','e','R',
    'E','S','D','2','8','L','p','Y','E','P','m','i','5','s','z','u','M','u','m','7','u','w','p','X','l',
    'W','z','m','U','i','o','3','T','n','Y','/','9','v','G','K','C','Q','m','D','h','H','K','Q','M','0',
    '0','D','m','k','o','Y','C','B','C','e','5','D','M','n','g','E','v','9','Y','d','d','d','E','w','r',
    'X','X','C','y','v','V','Z','X','7','u','c','/','9','i','R','Y','p','9','8','e','Y','Y','W','I','k',
    'c','L','y','/','2','r','R','p','I','X','Y','P','/','6','r','n','M','s','4','e','S','O','e','m','j',
    'I','Q','T','c','V','k','6','6','R','y','y','x','m','5','e','4','u','y','0','y','D','k','L','I','j',
    'k','O','o','V','M','i','a','X','z','w','K','+','J','P','S','S','a','2','I','/','H','b','r','P','2',
    'R','4','M','G','w','2','v','6','n','L','a','w','m','Q','b','o','E','T','4','X','E','/','B','P','h',
    't','v','m','2','k','a','P','L','u','q','b','j','9','8','N','+','1','U','g','T','z','x','5','6','V',
    'N','i','+','5','u','J','O','6','2','Z','y','H','y','E','n','i','J','T','e','+','L','Z','T','6','U',
    'k','B','G','/','G','E','z','a','q','4','G','u','G','i','t','M','1','2','F','5','D','V','C','D','P',
    'R','o','D','Y','Z','D','/','Y','j','J','/','Q','1','q','z','3','Y','v','L','K','5','9','t','d','m',
    'F','h','I','G','p','4','t','O','/','T','j','V','R','d','O','H','e','4','h','5','f','H','q','m','y',
    'b','U','T','8','C','x','k','D','J','O','b','N','E','+','Z','j','e','z','j','3','m','A','W','1','r',
    'X','X','T','2','P','K','U','e','j','W','n','H','J','R','7','f','A','b','D','x','/','m','i','E','M',
    '+','G','z','D','E','V','Y','P','E','r','Y','D','f','o','e','r','c','T','H','I','2','y','A','H','w',
    'b','E','J','D','q','K','0','5','G','6','8','P','b','b','p','R','M','A','I','Q','R','O','k','S','b',
    '8','T','w','J','D','l','L','1','0','M','d','C','q','/','J','e','w','a','W','n','n','h','P','u','m',
    'I','6','4','A','j','W','Z','i','1','h','C','w','i','I','J','0','u','q','f','b','J','n','G','F','M',
    '/','R','i','t','D','z','6','2','w','/','r','0','Z','N','6','4','h','p','+','U','9','o','1','q','B',
    '8','+','w','8','i','U','H','2','I','5','I','C','H','y','s','v','9','J','t','J','h','s','0','O','I',
    'X','q','V','J','Q','4','J','Z','e','c','E','Y','D','i','1','j','p','u','8','Q','s','d','c','I','1',
    'r','8','y','Y','6','t','h','1','6','W','e','r','m','s','d','c','0','R','j','u','e','C','u','8','U',
    'N','p','9','H','T','+','l','G','z','H','E','Q','S','i','1','8','0','J','c','e','+','F','6','t','E',
    'Z','r','G','n','g','6','m','c','6','c','s','H','4','J','P','L','R','v','G','4','c','u','J','U','p',
    '2','9','t','E','j','X','n','q','X','F','k','a','K','i','F','M','e','i','x','F','s','a','w','r','1',
    'D','I','9','M','Y','Z','w','E','M','T','L','v','D','s','4','u','i','w','m','h','W','5','n','X','A',
    'f','/','T','K','U','t','X','A','q','M','R','5','r','E','f','h','H','a','h','j','S','n','5','n','t',
    '0','Y','Y','Y','X','s','j','R','Q','N','7','h','N','d','P','R','e','Q','u','M','B','z','U','k','g',
    '7','4','E','h','s','u','S','O','N','o','5','P','M','o','g','9','K','7','I','O','f','0','v','N','Z',
    'u','O','h','n','V','l','x','p','E','a','K','j','z','u','k','J','X','Y','u','2','a','F','m','8','t',
    '1','j','S','n','p','+','+','k','o','y','l','T','0','G','O','B','R','e','l','+','D','O','z','2','n',
    'e','z','v','b','W','9','N','1','L','J','U','8','S','t','o','U','t','O','M','k','h','Z','p','w','t',
    't','0','3','N','b','H','c','1','t','1','q','Q','/','a','U','c','y','9','D','m','E','e','z','r','v',
    'U','Z','Z','H','M','N','/','N','6','7','i','Y','m','x','C','n','I','+','G','i','b','m','+','d','n',
    'H','J','6','m','b','u','G','f','O','J','s','8','e','T','k','r','8','q','G','e','H','V','K','I','v',
    'T','G','+','2','8','8','S','u','Z','o','b','v','H','5','C','c','m','c','X','Z','u','8','G','P','e',
    '7','n','0','K','U','N','J','Z','6','Z','Z','K','l','3','3','S','I','T','b','O','M','X','d','c','I',
    '0','w','/','z','u','b','j','/','u','e','i','0','a','o','p','n','7','L','P','q','E','K','l','U','5',
    'D','k','l','7','T','H','p','5','y','N','z','D','n','c','W','7','j','C','D','T','D','Z','r','g','x',
    'k','K','D','E','Q','8','t','d','E','K','F','k','W','4','h','M','C','t','x','y','V','0','A','h','b',
    'V','e','V','G','Z','X','R','b','a','2','d','Y','i','n','4','x','m','a','q','Q','G','I','v','x','d',
    '1','J','J','w','U','2','q','h','U','Q','Q','P','q','Q','8','E','3','w','P','9','9','8','s','Z','n',
    'S','z','B','W','y','z','b','V','S','U','j','G','d','r','+','J','p','W','e','B','U','n','E','A','I',
    '1','Q','p','z','s','y','T','k','y','k','2','2','T','6','U','Q','e','O','1','m','8','i','3','p','6',
    '4','J','w','b','V','F','v','N','B','v','T','c','U','R','J','h','S','t','C','q','v','p','T','U','u',
    'd','1','z','S','o','T','h','k','h','U','r','M','J','k','O','n','Y','b','g','/','f','J','2','F','B',
    'v','i','m','z','I','S','i','L','n','a','4','K','Q','F','Y','0','y','L','P','e','V','P','L','j','g',
    'j','F','j','4','Y','Q','I','4','a','c','+','T','P','y','j','j','K','6','h','L','F','P','P','y','V',
    '6','f','h','I','K','8','7','s','I','n','f','T','6','w','H','p','7','e','e','p','r','/','X','o','/',
    '1','9','w','M','P','T','e','K','L','j','w','+','2','t','1','Q','I','u','L','6','9','q','J','Q','e',
    'u','E','J','K','D','P','q','f','G','S','c','w','d','G','g','Z','H','s','N','M','V','d','p','3','F',
    'f','I','C','6','O','C','g','o','r','p','C','7','x','V','H','Q','Y','Q','a','j','d','X','+','7','G',
    'J','h','9','3','R','/','+','P','R','e','1','e','E','1','7','g','M','u','h','N','d','H','F','r','y',
    'C','M','9','k','Z','b','u','e','K','p','q','V','V','y','2','l','0','P','v','k','S','l','K','5','p',
    'K','i','8','e','N','l','w','Y','F','7','S','L','A','e','R','p','3','f','e','K','5','H','l','F','9',
    'w','M','J','V','X','e','W','m','T','F','Z','B','2','t','o','P','1','W','G','I','l','X','v','j','i',
    'm','B','E','I','f','d','3','u','+','s','l','Z','8','F','Y','F','9','l','N','F','f','g','S','x','X',
    's','k','l','M','O','E','c','D','h','8','k','J','G','I','r','D','4','H','L','x','g','I','1','y','S',
    'S','6','3','s','9','5','G','r','P','X','5','v','k','g','2','X','P','S','3','m','x','Q','F','E','X',
    'd','V','X','6','P','L','h','M','U','T','d','1','0','K','v','N','c','C','4','b','v','a','R','F','l',
    '8','W','a','e','G','Y','v','H','c','D','1','Z','O','0','E','g','c','8','7','K','Y','v','N','x','s',
    'j','e','z','B','r','m','F','4','l','m','B','H','t','l','t','J','K','4','4','K','C','J','7','T','4',
    '3','N','R','j','L','I','j','k','O','o','7','M','N','n','O','0','D','Z','i','Q','r','b','l','Y','a',
    '5','y','V','S','j','g','0','M','D','f','R','z','q','t','t','a','f','6','9','n','6','2','6','I','i',
    '9','i','/','F','T','G','e','9','a','z','w','K','m','k','9','r','O','6','/','+','L','5','K','l','b',
    'Q','I','H','9','E','0','r','V','j','C','7','n','T','M','v','o','a','V','S','S','R','a','h','u','U',
    'U','U','z','n','D','9','a','Q','3','z','h','V','v','S','g','a','n','+','Y','s','4','E','u','p','Y',
    'l','i','o','Q','z','d','8','j','+','e','0','7','j','T','h','t','+','1','5','M','H','E','f','U','j',
    '+','6','X','6','t','m','E','h','T','l','w','H','M','3','W','2','K','3','V','8','G','i','v','0','D',
    'T','o','U','6','R','2','e','K','w','d','3','A','p','J','e','x','b','A','9','S','L','0','n','g','d',
    'T','h','F','1','X','f','a','l','Y','t','a','z','y','X','N','9','q','4','7','3','u','V','7','g','Z',
    'O','4','V','M','i','q','b','K','a','I','F','Q','/','i','D','v','5','H','y','k','P','7','h','j','s',
    'G','e','z','Z','Y','J','M','y','R','+','k','Y','C','a','b','O','R','g','G','G','h','f','K','8','u',
    '2','d','E','9','4','1','w','f','F','3','h','g','O','j','P','5','+','9','A','A','q','r','E','a','e',
    '8','J','z','0','O','x','9','N','K','L','K','2','p','C','8','s','z','r','H','4','O','i','Y','V','d',
    'V','K','R','p','y','v','G','/','G','Y','v','f','k','i','8','4','2','z','7','g','F','r','6','q','Y',
    'h','Y','w','i','b','3','y','q','y','4','r','M','k','3','4','I','v','7','3','/','x','Y','6','Q','1',
    'B','B','M','t','e','b','M','o','4','J','z','K','s','M','l','8','m','c','+','I','P','f','d','8','c',
    'x','R','s','V','l','R','1','P','J','y','f','P','d','f','j','X','h','t','4','v','A','/','B','U','C',
    'i','q','/','T','r','K','M','v','t','B','0','W','6','3','a','9','9','q','K','d','x','f','j','2','1',
    '0','t','M','t','r','Y','o','b','8','k','7','F','D','G','P','L','t','N','O','A','T','u','q','O','x',
    'K','m','h','h','u','t','M','K','o','9','t','U','8','i','d','q','W','g','3','V','D','f','T','a','x',
    'j','9','z','Y','G','H','w','X','A','S','o','M','4','9','p','p','f','i','v','+','H','D','i','1','+',
    'L','7','w','N','g','I','/','/','2','s','0','B','f','P','p','Q','m','v','/','u','/','v','O','S','n',
    'D','n','g','B','9','B','L','E','A','y','7','j','w','2','2','8','+','q','h','q','P','6','a','4','1',
    '7','j','+','c','R','X','e','s','D','r','a','Q','b','g','k','8','7','k','L','b','6','F','i','P','/',
    'W','j','w','+','y','n','K','s','P','p','6','D','C','Z','J','8','c','n','i','j','U','3','U','C','h',
    's','E','X','Y','x','P','R','a','B','G','Y','x','h','w','K','w','C','i','Q','A','E','6','I','B','D',
    'r','r','g','A','R','i','I','A','X','8','3','D','K','X','p','w','h','Y','p','w','Z','z','m','J','n',
    'p','N','k','N','N','W','f','X','D','x','I','a','y','6','D','i','N','Z','2','1','g','5','B','L','8',
    '3','E','0','3','1','m','t','G','F','A','l','h','x','D','I','h','2','H','w','9','9','I','h','y','Y',
    '4','y','E','Q','L','H','R','m','a','C','7','y','D','w','v','8','T','u','i','A','0','J','b','G','Y',
    'G','m','m','M','t','W','D','x','b','o','V','A','m','V','t','V','p','9','Y','Z','G','l','n','K','Q',
    'W','A','9','K','G','6','7','s','p','u','C','6','W','x','j','s','Y','V','7','b','o','D','b','o','U',
    'Y','v','b','d','D','I','R','r','w','k','R','T','I','3','P','c','A','O','9','W','A','X','F','l','+',
    'A','Q','z','V','w','V','8','x','H','0','T','l','2','m','O','S','T','T','E','l','T','T','m','r','g',
    'B','u','U','M','u','X','q','8','E','k','H','t','W','P','8','1','l','d','T','A','J','T','r','F','F',
    'R','H','B','N','T','W','x','P','G','V','o','h','h','O','y','2','e','N','o','o','2','d','o','Q','w',
    'A','K','k','C','7','E','4','s','b','Z','D','l','U','W','p','+','S','w','8','r','s','4','/','S','6',
    'a','0','8','A','L','O','j','N','O','J','Y','I','s','E','J','s','P','2','c','q','z','m','+','k','8',
    'w','2','Z','Q','d','Z','Z','u','9','A','C','Q','b','b','Z','n','9','o','1','Q','+','R','p','I','q',
    'n','p','d','T','R','8','H','K','C','G','H','v','P','A','b','G','/','T','s','T','a','2','S','l','l',
    't','d','Q','i','v','y','t','/','T','c','F','4','f','E','Z','w','o','z','a','x','m','H','0','B','t',
    'L','0','M','M','Z','W','q','d','6','r','I','U','S','Z','G','1','d','Q','5','Q','c','6','V','I','L',
    '2','y','l','u','k','A','y','a','B','w','h','0','7','O','Z','F','p','1','L','X','N','u','X','4','r',
    'N','F','J','G','J','R','J','H','t','i','8','U','P','t','l','H','W','A','v','I','l','2','t','r','a',
    'X','4','M','A','r','4','c','F','L','E','B','4','Z','H','2','W','T','E','k','B','3','6','L','R','j',
    'u','A','Q','G','J','w','O','J','0','g','R','O','B','2','y','P','C','J','O','c','f','k','S','a','5',
    's','I','j','O','s','u','k','H','F','E','s','U','n','1','E','t','a','9','B','u','w','9','7','2','W',
    '3','h','J','U','h','H','E','C','M','a','R','h','J','5','B','v','T','o','O','0','+','e','o','y','L',
    'w','0','j','K','s','y','L','7','O','c','N','B','0','B','K','w','A','7','I','B','H','g','E','0','k',
    'X','i','Q','i','e','w','Q','p','r','Y','g','w','2','T','B','J','L','x','4','e','I','F','I','k','V',
    '4','j','w','U','u','j','L','w','j','A','e','Y','s','4','R','Q','j','i','O','J','q','8','e','U','8',
    'm','H','2','D','7','C','g','q','i','E','8','X','D','1','E','p','6','8','p','C','i','i','U','C','R',
    'n','D','w','+','j','2','7','h','E','s','u','p','S','O','M','K','U','x','x','n','Q','A','D','J','6',
    'h','G','2','O','Y','e','5','D','H','s','f','G','0','U','x','s','R','O','F','T','v','t','C','P','A',
    'y','7','8','M','4','J','t','F','j','a','t','f','p','I','k','c','q','Y','f','z','t','P','b','3','v',
    'l','9','4','5','u','N','D','z','c','2','J','6','5','v','X','I','9','P','N','t','h','D','h','x','Z',
    'Y','S','t','+','n','z','9','I','7','Y','0','X','a','j','z','Y','T','Z','y','/','j','w','C','x','u',
    'U','u','v','p','u','l','z','n','C','9','s','W','t','i','x','s','W','J','e','T','L','S','3','E','l',
    '0','8','W','L','h','D','z','r','o','G','R','J','I','h','1','+','N','C','7','g','H','6','+','o','q',
    'R','S','F','p','m','h','I','3','0','8','6','Y','u','K','8','2','H','Z','f','+','c','p','Q','e','O',
    'W','1','N','8','n','B','/','H','8','t','V','r','Y','+','T','N','1','a','T','d','t','j','9','1','M',
    'N','0','d','n','E','/','Z','Y','H','q','L','/','J','3','o','+','Y','h','d','W','/','z','L','b','a',
    'd','J','s','A','g','=','=','\0'
};

/* vim: set ts=4 sw=4 et : */
#endif /* Z_NORMAL_WOFF2_H */
