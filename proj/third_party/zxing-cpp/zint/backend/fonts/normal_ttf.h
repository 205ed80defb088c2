/* fonts/normal_ttf.h - Arimo TrueType as static array */
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

#ifndef Z_NORMAL_TTF_H
#define Z_NORMAL_TTF_H

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
static const unsigned char normal_ttf[27448] = {
    0x00, 0x01, 0x00, 0x00, 0x00, 0x11, 0x01, 0x00, 0x00, 0x04, 0x00, 0x10, 0x47, 0x44, 0x45, 0x46,
    0x01, 0x70, 0x02, 0x02, 0x00, 0x00, 0x68, 0xa4, 0x00, 0x00, 0x00, 0x22, 0x47, 0x50, 0x4f, 0x53,
    0x80, 0x65, 0x99, 0xa0, 0x00, 0x00, 0x68, 0xc8, 0x00, 0x00, 0x02, 0x42, 0x47, 0x53, 0x55, 0x42,
    0xa6, 0x21, 0xa9, 0x11, 0x00, 0x00, 0x6b, 0x0c, 0x00, 0x00, 0x00, 0x2c, 0x4f, 0x53, 0x2f, 0x32,
    0x76, 0x3c, 0xa9, 0xcc, 0x00, 0x00, 0x55, 0xd4, 0x00, 0x00, 0x00, 0x60, 0x63, 0x6d, 0x61, 0x70,
    0x1c, 0x30, 0x1c, 0x09, 0x00, 0x00, 0x56, 0x34, 0x00, 0x00, 0x00, 0xfc, 0x63, 0x76, 0x74, 0x20,
    0x6d, 0x32, 0x2c, 0x3a, 0x00, 0x00, 0x66, 0x38, 0x00, 0x00, 0x00, 0xf8, 0x66, 0x70, 0x67, 0x6d,
    0x9e, 0x36, 0x17, 0xd6, 0x00, 0x00, 0x57, 0x30, 0x00, 0x00, 0x0e, 0x15, 0x67, 0x61, 0x73, 0x70,
    0x00, 0x00, 0x00, 0x10, 0x00, 0x00, 0x68, 0x9c, 0x00, 0x00, 0x00, 0x08, 0x67, 0x6c, 0x79, 0x66,
    0x0e, 0xf1, 0x9e, 0x8a, 0x00, 0x00, 0x01, 0x1c, 0x00, 0x00, 0x4f, 0x7a, 0x68, 0x65, 0x61, 0x64,
    0x26, 0xc8, 0xfc, 0x28, 0x00, 0x00, 0x52, 0x50, 0x00, 0x00, 0x00, 0x36, 0x68, 0x68, 0x65, 0x61,
    0x19, 0x8a, 0x10, 0x45, 0x00, 0x00, 0x55, 0xb0, 0x00, 0x00, 0x00, 0x24, 0x68, 0x6d, 0x74, 0x78,
    0x5d, 0x87, 0x43, 0x2f, 0x00, 0x00, 0x52, 0x88, 0x00, 0x00, 0x03, 0x28, 0x6c, 0x6f, 0x63, 0x61,
    0xa1, 0x26, 0x8d, 0x03, 0x00, 0x00, 0x50, 0xb8, 0x00, 0x00, 0x01, 0x96, 0x6d, 0x61, 0x78, 0x70,
    0x06, 0xb0, 0x12, 0x63, 0x00, 0x00, 0x50, 0x98, 0x00, 0x00, 0x00, 0x20, 0x6e, 0x61, 0x6d, 0x65,
    0x17, 0x7f, 0x31, 0xd4, 0x00, 0x00, 0x67, 0x30, 0x00, 0x00, 0x01, 0x4c, 0x70, 0x6f, 0x73, 0x74,
    0xff, 0x2a, 0x00, 0x96, 0x00, 0x00, 0x68, 0x7c, 0x00, 0x00, 0x00, 0x20, 0x70, 0x72, 0x65, 0x70,
    0x8b, 0x4a, 0xb3, 0x56, 0x00, 0x00, 0x65, 0x48, 0x00, 0x00, 0x00, 0xef, 0x00, 0x02, 0x00, 0xb9,
    0x00, 0x00, 0x01, 0x7f, 0x05, 0x81, 0x00, 0x03, 0x00, 0x07, 0x00, 0x25, 0x40, 0x22, 0x00, 0x00,
    0x00, 0x01, 0x5f, 0x00, 0x01, 0x01, 0x50, 0x4d, 0x00, 0x02, 0x02, 0x03, 0x5f, 0x04, 0x01, 0x03,
    0x03, 0x51, 0x03, 0x4e, 0x04, 0x04, 0x04, 0x07, 0x04, 0x07, 0x12, 0x11, 0x10, 0x05, 0x0b, 0x19,
    0x2b, 0x01, 0x23, 0x03, 0x33, 0x03, 0x35, 0x33, 0x15, 0x01, 0x67, 0x94, 0x18, 0xc4, 0xc6, 0xc2,
    0x01, 0x8d, 0x03, 0xf4, 0xfa, 0x7f, 0xc9, 0xc9, 0x00, 0x02, 0x00, 0x57, 0x03, 0xc6, 0x02, 0x80,
    0x05, 0x81, 0x00, 0x03, 0x00, 0x07, 0x00, 0x17, 0x40, 0x14, 0x02, 0x01, 0x00, 0x00, 0x01, 0x5f,
    0x03, 0x01, 0x01, 0x01, 0x50, 0x00, 0x4e, 0x11, 0x11, 0x11, 0x10, 0x04, 0x0b, 0x1a, 0x2b, 0x01,
    0x23, 0x03, 0x33, 0x01, 0x23, 0x03, 0x33, 0x02, 0x6a, 0x8e, 0x14, 0xb8, 0xfe, 0x79, 0x8d, 0x15,
    0xb8, 0x03, 0xc6, 0x01, 0xbb, 0xfe, 0x45, 0x01, 0xbb, 0x00, 0x00, 0x02, 0x00, 0x09, 0x00, 0x00,
    0x04, 0x69, 0x05, 0x79, 0x00, 0x1b, 0x00, 0x1f, 0x00, 0x4c, 0x40, 0x49, 0x0c, 0x0a, 0x02, 0x08,
    0x11, 0x0f, 0x10, 0x0d, 0x04, 0x07, 0x00, 0x08, 0x07, 0x68, 0x0e, 0x06, 0x02, 0x00, 0x05, 0x03,
    0x02, 0x01, 0x02, 0x00, 0x01, 0x67, 0x0b, 0x01, 0x09, 0x09, 0x50, 0x4d, 0x04, 0x01, 0x02, 0x02,
    0x51, 0x02, 0x4e, 0x1c, 0x1c, 0x00, 0x00, 0x1c, 0x1f, 0x1c, 0x1f, 0x1e, 0x1d, 0x00, 0x1b, 0x00,
    0x1b, 0x1a, 0x19, 0x18, 0x17, 0x16, 0x15, 0x14, 0x13, 0x11, 0x11, 0x11, 0x11, 0x11, 0x11, 0x11,
    0x11, 0x11, 0x12, 0x0b, 0x1f, 0x2b, 0x01, 0x03, 0x21, 0x15, 0x21, 0x03, 0x23, 0x13, 0x21, 0x03,
    0x23, 0x13, 0x23, 0x35, 0x33, 0x13, 0x23, 0x35, 0x21, 0x13, 0x33, 0x03, 0x21, 0x13, 0x33, 0x03,
    0x33, 0x15, 0x21, 0x03, 0x21, 0x13, 0x03, 0x80, 0x4e, 0x01, 0x04, 0xfe, 0xe5, 0x58, 0x6e, 0x56,
    0xfe, 0x95, 0x54, 0x6e, 0x54, 0xc9, 0xe1, 0x4e, 0xfc, 0x01, 0x12, 0x59, 0x6e, 0x58, 0x01, 0x6b,
    0x58, 0x6e, 0x58, 0xd3, 0xfd, 0x40, 0x50, 0x01, 0x6a, 0x4e, 0x03, 0x75, 0xfe, 0x8f, 0x6c, 0xfe,
    0x68, 0x01, 0x98, 0xfe, 0x68, 0x01, 0x98, 0x6c, 0x01, 0x71, 0x6c, 0x01, 0x98, 0xfe, 0x68, 0x01,
    0x98, 0xfe, 0x68, 0x6c, 0xfe, 0x8f, 0x01, 0x71, 0x00, 0x03, 0x00, 0x16, 0xff, 0x72, 0x04, 0x52,
    0x05, 0xec, 0x00, 0x24, 0x00, 0x2c, 0x00, 0x33, 0x00, 0xa0, 0x40, 0x11, 0x19, 0x01, 0x08, 0x02,
    0x31, 0x29, 0x1a, 0x16, 0x15, 0x07, 0x03, 0x02, 0x08, 0x01, 0x08, 0x02, 0x4c, 0x4b, 0xb0, 0x1f,
    0x50, 0x58, 0x40, 0x22, 0x00, 0x06, 0x00, 0x06, 0x86, 0x00, 0x03, 0x03, 0x52, 0x4d, 0x00, 0x08,
    0x08, 0x02, 0x61, 0x04, 0x01, 0x02, 0x02, 0x50, 0x4d, 0x07, 0x01, 0x01, 0x01, 0x00, 0x62, 0x05,
    0x01, 0x00, 0x00, 0x51, 0x00, 0x4e, 0x1b, 0x4b, 0xb0, 0x23, 0x50, 0x58, 0x40, 0x22, 0x00, 0x03,
    0x02, 0x03, 0x85, 0x00, 0x06, 0x00, 0x06, 0x86, 0x00, 0x08, 0x08, 0x02, 0x61, 0x04, 0x01, 0x02,
    0x02, 0x50, 0x4d, 0x07, 0x01, 0x01, 0x01, 0x00, 0x62, 0x05, 0x01, 0x00, 0x00, 0x51, 0x00, 0x4e,
    0x1b, 0x40, 0x26, 0x00, 0x03, 0x02, 0x03, 0x85, 0x00, 0x06, 0x00, 0x06, 0x86, 0x04, 0x01, 0x02,
    0x00, 0x08, 0x01, 0x02, 0x08, 0x69, 0x07, 0x01, 0x01, 0x00, 0x00, 0x01, 0x59, 0x07, 0x01, 0x01,
    0x01, 0x00, 0x62, 0x05, 0x01, 0x00, 0x01, 0x00, 0x52, 0x59, 0x59, 0x40, 0x0c, 0x17, 0x16, 0x11,
    0x1e, 0x11, 0x11, 0x18, 0x14, 0x10, 0x09, 0x0b, 0x1f, 0x2b, 0x25, 0x24, 0x03, 0x37, 0x16, 0x16,
    0x17, 0x11, 0x2e, 0x03, 0x35, 0x34, 0x36, 0x37, 0x35, 0x33, 0x15, 0x16, 0x16, 0x17, 0x07, 0x26,
    0x26, 0x27, 0x11, 0x1e, 0x03, 0x15, 0x14, 0x06, 0x07, 0x15, 0x23, 0x01, 0x34, 0x26, 0x26, 0x27,
    0x11, 0x36, 0x36, 0x01, 0x14, 0x16, 0x16, 0x17, 0x11, 0x04, 0x02, 0x06, 0xfe, 0x56, 0x46, 0xaa,
    0x19, 0x9f, 0x8e, 0xb1, 0x87, 0x53, 0x25, 0xe1, 0xcf, 0x7c, 0xbb, 0xcc, 0x2a, 0xae, 0x14, 0x7a,
    0x75, 0xb3, 0x97, 0x58, 0x2e, 0xf2, 0xde, 0x7c, 0x01, 0xa0, 0x34, 0x62, 0x8e, 0x8d, 0x97, 0xfd,
    0x5c, 0x32, 0x63, 0x6f, 0xfe, 0xfc, 0x14, 0x12, 0x01, 0x55, 0x25, 0x77, 0x78, 0x09, 0x01, 0xf0,
    0x2c, 0x46, 0x5b, 0x68, 0x49, 0x9b, 0xaf, 0x09, 0x83, 0x83, 0x09, 0x97, 0xa0, 0x21, 0x5e, 0x69,
    0x0b, 0xfe, 0x43, 0x2a, 0x46, 0x58, 0x78, 0x51, 0xa5, 0xc8, 0x0b, 0xa2, 0x02, 0x18, 0x41, 0x54,
    0x37, 0x25, 0xfe, 0x2c, 0x09, 0x74, 0x02, 0xf4, 0x3b, 0x52, 0x38, 0x1c, 0x01, 0xa5, 0x0e, 0x00,
    0x00, 0x05, 0x00, 0x49, 0xff, 0xf4, 0x06, 0xd4, 0x05, 0x8d, 0x00, 0x0b, 0x00, 0x16, 0x00, 0x1a,
    0x00, 0x26, 0x00, 0x31, 0x00, 0xb0, 0x4b, 0xb0, 0x0a, 0x50, 0x58, 0x40, 0x28, 0x00, 0x01, 0x00,
    0x08, 0x07, 0x01, 0x08, 0x6a, 0x00, 0x07, 0x00, 0x03, 0x09, 0x07, 0x03, 0x69, 0x00, 0x06, 0x06,
    0x02, 0x61, 0x05, 0x0a, 0x02, 0x02, 0x02, 0x50, 0x4d, 0x00, 0x09, 0x09, 0x00, 0x61, 0x04, 0x01,
    0x00, 0x00, 0x57, 0x00, 0x4e, 0x1b, 0x4b, 0xb0, 0x2a, 0x50, 0x58, 0x40, 0x28, 0x00, 0x01, 0x00,
    0x08, 0x07, 0x01, 0x08, 0x6a, 0x00, 0x07, 0x00, 0x03, 0x09, 0x07, 0x03, 0x69, 0x00, 0x06, 0x06,
    0x02, 0x61, 0x05, 0x0a, 0x02, 0x02, 0x02, 0x56, 0x4d, 0x00, 0x09, 0x09, 0x00, 0x61, 0x04, 0x01,
    0x00, 0x00, 0x57, 0x00, 0x4e, 0x1b, 0x40, 0x30, 0x00, 0x01, 0x00, 0x08, 0x07, 0x01, 0x08, 0x6a,
    0x00, 0x07, 0x00, 0x03, 0x09, 0x07, 0x03, 0x69, 0x00, 0x05, 0x05, 0x50, 0x4d, 0x00, 0x06, 0x06,
    0x02, 0x61, 0x0a, 0x01, 0x02, 0x02, 0x56, 0x4d, 0x00, 0x04, 0x04, 0x51, 0x4d, 0x00, 0x09, 0x09,
    0x00, 0x61, 0x00, 0x00, 0x00, 0x57, 0x00, 0x4e, 0x59, 0x59, 0x40, 0x19, 0x0d, 0x0c, 0x30, 0x2e,
    0x2a, 0x29, 0x25, 0x23, 0x1f, 0x1d, 0x1a, 0x19, 0x18, 0x17, 0x12, 0x11, 0x0c, 0x16, 0x0d, 0x16,
    0x24, 0x22, 0x0b, 0x0b, 0x18, 0x2b, 0x01, 0x14, 0x06, 0x23, 0x22, 0x26, 0x35, 0x34, 0x36, 0x33,
    0x32, 0x16, 0x01, 0x32, 0x16, 0x15, 0x14, 0x06, 0x20, 0x26, 0x35, 0x34, 0x36, 0x01, 0x23, 0x01,
    0x33, 0x01, 0x34, 0x26, 0x23, 0x22, 0x06, 0x15, 0x14, 0x16, 0x33, 0x32, 0x36, 0x01, 0x34, 0x26,
    0x22, 0x06, 0x15, 0x14, 0x16, 0x33, 0x32, 0x36, 0x06, 0xd4, 0xa2, 0x9e, 0x9c, 0x9f, 0x99, 0xa6,
    0xa4, 0x98, 0xfa, 0xb6, 0x9f, 0x9a, 0x9f, 0xfe, 0xc4, 0x9f, 0x9a, 0x01, 0x2c, 0x9b, 0x03, 0x9a,
    0x9d, 0xfc, 0x85, 0x4c, 0x5a, 0x5e, 0x50, 0x50, 0x5c, 0x57, 0x51, 0x04, 0x10, 0x4d, 0xb6, 0x51,
    0x4f, 0x5b, 0x58, 0x52, 0x01, 0xb2, 0xd7, 0xe7, 0xe1, 0xdd, 0xe4, 0xdf, 0xe5, 0x02, 0xfd, 0xe0,
    0xde, 0xd9, 0xea, 0xe8, 0xdb, 0xdf, 0xdf, 0xfa, 0x73, 0x05, 0x81, 0xfe, 0x4e, 0xb0, 0xa2, 0x9f,
    0xb3, 0xad, 0xa5, 0xa8, 0xfe, 0x8d, 0xb3, 0xa1, 0x9e, 0xb6, 0xab, 0xa5, 0xa7, 0x00, 0x00, 0x03,
    0x00, 0x48, 0xff, 0xec, 0x05, 0x36, 0x05, 0x89, 0x00, 0x23, 0x00, 0x2d, 0x00, 0x39, 0x00, 0x90,
    0x4b, 0xb0, 0x1b, 0x50, 0x58, 0x40, 0x13, 0x36, 0x26, 0x21, 0x1d, 0x1b, 0x1a, 0x18, 0x16, 0x0a,
    0x09, 0x03, 0x05, 0x22, 0x02, 0x02, 0x00, 0x03, 0x02, 0x4c, 0x1b, 0x40, 0x16, 0x36, 0x26, 0x21,
    0x1d, 0x1b, 0x1a, 0x18, 0x16, 0x0a, 0x09, 0x03, 0x05, 0x02, 0x01, 0x04, 0x03, 0x22, 0x01, 0x00,
    0x04, 0x03, 0x4c, 0x59, 0x4b, 0xb0, 0x1b, 0x50, 0x58, 0x40, 0x18, 0x00, 0x05, 0x05, 0x02, 0x61,
    0x00, 0x02, 0x02, 0x50, 0x4d, 0x04, 0x01, 0x03, 0x03, 0x00, 0x61, 0x01, 0x06, 0x02, 0x00, 0x00,
    0x57, 0x00, 0x4e, 0x1b, 0x40, 0x23, 0x00, 0x05, 0x05, 0x02, 0x61, 0x00, 0x02, 0x02, 0x50, 0x4d,
    0x00, 0x03, 0x03, 0x00, 0x61, 0x01, 0x06, 0x02, 0x00, 0x00, 0x57, 0x4d, 0x00, 0x04, 0x04, 0x00,
    0x61, 0x01, 0x06, 0x02, 0x00, 0x00, 0x57, 0x00, 0x4e, 0x59, 0x40, 0x13, 0x01, 0x00, 0x32, 0x30,
    0x2c, 0x2a, 0x20, 0x1e, 0x11, 0x0f, 0x06, 0x04, 0x00, 0x23, 0x01, 0x23, 0x07, 0x0b, 0x16, 0x2b,
    0x05, 0x22, 0x27, 0x06, 0x06, 0x23, 0x22, 0x26, 0x35, 0x10, 0x25, 0x26, 0x26, 0x35, 0x34, 0x36,
    0x33, 0x32, 0x16, 0x15, 0x14, 0x06, 0x07, 0x16, 0x17, 0x36, 0x37, 0x17, 0x06, 0x07, 0x16, 0x33,
    0x32, 0x37, 0x15, 0x06, 0x25, 0x26, 0x27, 0x06, 0x15, 0x14, 0x16, 0x33, 0x32, 0x36, 0x13, 0x34,
    0x26, 0x23, 0x22, 0x06, 0x15, 0x14, 0x17, 0x3e, 0x02, 0x04, 0xa9, 0xb1, 0x79, 0x4b, 0xc0, 0x69,
    0xd7, 0xec, 0x01, 0x57, 0x21, 0x30, 0xb7, 0xa8, 0x97, 0xb9, 0xb7, 0xe2, 0x6f, 0xb6, 0x71, 0x3a,
    0x91, 0x3f, 0x95, 0x60, 0x70, 0x47, 0x2e, 0x38, 0xfe, 0x1d, 0xc6, 0x79, 0xec, 0x9b, 0x86, 0x47,
    0x8e, 0x7f, 0x64, 0x56, 0x60, 0x64, 0x41, 0x83, 0x7b, 0x3f, 0x0c, 0x7f, 0x41, 0x46, 0xcf, 0xb8,
    0x01, 0x16, 0x97, 0x3e, 0xaa, 0x46, 0x96, 0xa5, 0x98, 0x84, 0x76, 0xb8, 0x5a, 0xcd, 0xcf, 0xa6,
    0xf4, 0x2b, 0xf9, 0xdc, 0x62, 0x10, 0x87, 0x16, 0xe5, 0xea, 0xdf, 0x64, 0xc9, 0x79, 0x8d, 0x37,
    0x03, 0xc7, 0x48, 0x5b, 0x67, 0x5b, 0x72, 0x82, 0x35, 0x4e, 0x5a, 0x00, 0x00, 0x01, 0x00, 0x68,
    0x03, 0xc6, 0x01, 0x20, 0x05, 0x81, 0x00, 0x03, 0x00, 0x13, 0x40, 0x10, 0x00, 0x00, 0x00, 0x01,
    0x5f, 0x00, 0x01, 0x01, 0x50, 0x00, 0x4e, 0x11, 0x10, 0x02, 0x0b, 0x18, 0x2b, 0x01, 0x23, 0x03,
    0x33, 0x01, 0x0a, 0x8d, 0x15, 0xb8, 0x03, 0xc6, 0x01, 0xbb, 0x00, 0x01, 0x00, 0x7f, 0xfe, 0x58,
    0x02, 0x9e, 0x05, 0xcc, 0x00, 0x0e, 0x00, 0x13, 0x40, 0x10, 0x00, 0x00, 0x00, 0x52, 0x4d, 0x00,
    0x01, 0x01, 0x55, 0x01, 0x4e, 0x16, 0x13, 0x02, 0x0b, 0x18, 0x2b, 0x13, 0x10, 0x12, 0x37, 0x33,
    0x06, 0x02, 0x11, 0x10, 0x12, 0x17, 0x23, 0x26, 0x02, 0x11, 0x7f, 0xb5, 0xbc, 0xae, 0xbb, 0xaf,
    0xad, 0xbd, 0xae, 0xbd, 0xb4, 0x02, 0x14, 0x01, 0x21, 0x01, 0xcc, 0xcb, 0xd0, 0xfe, 0x2c, 0xfe,
    0xea, 0xfe, 0xeb, 0xfe, 0x2e, 0xd3, 0xcc, 0x01, 0xcd, 0x01, 0x1f, 0x00, 0x00, 0x01, 0x00, 0x0c,
    0xfe, 0x58, 0x02, 0x2b, 0x05, 0xcc, 0x00, 0x0d, 0x00, 0x13, 0x40, 0x10, 0x00, 0x01, 0x01, 0x52,
    0x4d, 0x00, 0x00, 0x00, 0x55, 0x00, 0x4e, 0x15, 0x13, 0x02, 0x0b, 0x18, 0x2b, 0x01, 0x10, 0x02,
    0x07, 0x23, 0x36, 0x12, 0x10, 0x02, 0x27, 0x33, 0x16, 0x12, 0x11, 0x02, 0x2b, 0xb5, 0xbc, 0xae,
    0xbc, 0xae, 0xaf, 0xbb, 0xae, 0xbd, 0xb4, 0x02, 0x10, 0xfe, 0xdf, 0xfe, 0x34, 0xcb, 0xd2, 0x01,
    0xd1, 0x02, 0x2e, 0x01, 0xd2, 0xd1, 0xcc, 0xfe, 0x33, 0xfe, 0xe1, 0x00, 0x00, 0x01, 0x00, 0x21,
    0x02, 0xb2, 0x02, 0xfd, 0x05, 0x81, 0x00, 0x0e, 0x00, 0x1d, 0x40, 0x1a, 0x0c, 0x0b, 0x0a, 0x09,
    0x08, 0x07, 0x06, 0x05, 0x04, 0x03, 0x02, 0x01, 0x00, 0x0d, 0x00, 0x49, 0x00, 0x00, 0x00, 0x50,
    0x00, 0x4e, 0x1d, 0x01, 0x0b, 0x17, 0x2b, 0x01, 0x25, 0x17, 0x05, 0x17, 0x07, 0x03, 0x03, 0x27,
    0x37, 0x25, 0x37, 0x05, 0x03, 0x33, 0x01, 0xc8, 0x01, 0x08, 0x2d, 0xfe, 0xe6, 0xb9, 0x77, 0x96,
    0x9c, 0x77, 0xbd, 0xfe, 0xe8, 0x2d, 0x01, 0x0b, 0x0c, 0x88, 0x04, 0x5a, 0x67, 0x84, 0x49, 0xfa,
    0x48, 0x01, 0x02, 0xff, 0x00, 0x48, 0xf8, 0x49, 0x86, 0x6b, 0x01, 0x29, 0x00, 0x01, 0x00, 0x64,
    0x00, 0xb4, 0x04, 0x47, 0x04, 0x9e, 0x00, 0x0b, 0x00, 0x2c, 0x40, 0x29, 0x00, 0x03, 0x02, 0x00,
    0x03, 0x57, 0x04, 0x01, 0x02, 0x06, 0x05, 0x02, 0x01, 0x00, 0x02, 0x01, 0x67, 0x00, 0x03, 0x03,
    0x00, 0x5f, 0x00, 0x00, 0x03, 0x00, 0x4f, 0x00, 0x00, 0x00, 0x0b, 0x00, 0x0b, 0x11, 0x11, 0x11,
    0x11, 0x11, 0x07, 0x0b, 0x1b, 0x2b, 0x01, 0x11, 0x23, 0x11, 0x21, 0x35, 0x21, 0x11, 0x33, 0x11,
    0x21, 0x15, 0x02, 0x9f, 0x93, 0xfe, 0x58, 0x01, 0xa8, 0x93, 0x01, 0xa8, 0x02, 0x60, 0xfe, 0x54,
    0x01, 0xac, 0x92, 0x01, 0xac, 0xfe, 0x54, 0x92, 0x00, 0x01, 0x00, 0xb8, 0xfe, 0xfa, 0x01, 0x81,
    0x00, 0xdb, 0x00, 0x09, 0x00, 0x3c, 0x4b, 0xb0, 0x0a, 0x50, 0x58, 0x40, 0x12, 0x00, 0x00, 0x01,
    0x01, 0x00, 0x71, 0x03, 0x01, 0x02, 0x02, 0x01, 0x5f, 0x00, 0x01, 0x01, 0x51, 0x01, 0x4e, 0x1b,
    0x40, 0x11, 0x00, 0x00, 0x01, 0x00, 0x86, 0x03, 0x01, 0x02, 0x02, 0x01, 0x5f, 0x00, 0x01, 0x01,
    0x51, 0x01, 0x4e, 0x59, 0x40, 0x0b, 0x00, 0x00, 0x00, 0x09, 0x00, 0x09, 0x12, 0x14, 0x04, 0x0b,
    0x18, 0x2b, 0x25, 0x15, 0x14, 0x06, 0x07, 0x23, 0x36, 0x35, 0x23, 0x35, 0x01, 0x81, 0x26, 0x28,
    0x7b, 0x5e, 0x58, 0xdb, 0xa8, 0x6a, 0x8e, 0x41, 0x88, 0x7e, 0xdb, 0x00, 0x00, 0x01, 0x00, 0x5b,
    0x01, 0xd0, 0x02, 0x4f, 0x02, 0x70, 0x00, 0x03, 0x00, 0x1e, 0x40, 0x1b, 0x00, 0x00, 0x01, 0x01,
    0x00, 0x57, 0x00, 0x00, 0x00, 0x01, 0x5f, 0x02, 0x01, 0x01, 0x00, 0x01, 0x4f, 0x00, 0x00, 0x00,
    0x03, 0x00, 0x03, 0x11, 0x03, 0x0b, 0x17, 0x2b, 0x13, 0x35, 0x21, 0x15, 0x5b, 0x01, 0xf4, 0x01,
    0xd0, 0xa0, 0xa0, 0x00, 0x00, 0x01, 0x00, 0xbb, 0x00, 0x00, 0x01, 0x7e, 0x00, 0xdb, 0x00, 0x03,
    0x00, 0x19, 0x40, 0x16, 0x00, 0x00, 0x00, 0x01, 0x5f, 0x02, 0x01, 0x01, 0x01, 0x51, 0x01, 0x4e,
    0x00, 0x00, 0x00, 0x03, 0x00, 0x03, 0x11, 0x03, 0x0b, 0x17, 0x2b, 0x33, 0x35, 0x33, 0x15, 0xbb,
    0xc3, 0xdb, 0xdb, 0x00, 0x00, 0x01, 0x00, 0x00, 0xff, 0xec, 0x02, 0x39, 0x05, 0xcc, 0x00, 0x03,
    0x00, 0x19, 0x40, 0x16, 0x00, 0x00, 0x00, 0x52, 0x4d, 0x02, 0x01, 0x01, 0x01, 0x51, 0x01, 0x4e,
    0x00, 0x00, 0x00, 0x03, 0x00, 0x03, 0x11, 0x03, 0x0b, 0x17, 0x2b, 0x15, 0x01, 0x33, 0x01, 0x01,
    0x9b, 0x9e, 0xfe, 0x69, 0x14, 0x05, 0xe0, 0xfa, 0x20, 0x00, 0x00, 0x02, 0x00, 0x50, 0xff, 0xec,
    0x04, 0x23, 0x05, 0x96, 0x00, 0x0a, 0x00, 0x16, 0x00, 0x1f, 0x40, 0x1c, 0x00, 0x02, 0x02, 0x01,
    0x61, 0x00, 0x01, 0x01, 0x56, 0x4d, 0x00, 0x03, 0x03, 0x00, 0x61, 0x00, 0x00, 0x00, 0x57, 0x00,
    0x4e, 0x24, 0x24, 0x24, 0x12, 0x04, 0x0b, 0x1a, 0x2b, 0x01, 0x10, 0x02, 0x20, 0x02, 0x11, 0x10,
    0x12, 0x21, 0x32, 0x12, 0x03, 0x10, 0x02, 0x23, 0x22, 0x02, 0x11, 0x10, 0x12, 0x33, 0x32, 0x12,
    0x04, 0x23, 0xf9, 0xfe, 0x1a, 0xf4, 0xed, 0x01, 0x00, 0xf9, 0xed, 0xb7, 0x8d, 0xa2, 0xa6, 0x91,
    0x93, 0xa0, 0x9f, 0x94, 0x02, 0xc1, 0xfe, 0x9f, 0xfe, 0x8c, 0x01, 0x72, 0x01, 0x63, 0x01, 0x6b,
    0x01, 0x6a, 0xfe, 0x92, 0xfe, 0x99, 0x01, 0x31, 0x01, 0x12, 0xfe, 0xf2, 0xfe, 0xcb, 0xfe, 0xd4,
    0xfe, 0xea, 0x01, 0x1c, 0x00, 0x01, 0x00, 0x9c, 0x00, 0x00, 0x04, 0x0f, 0x05, 0x81, 0x00, 0x0a,
    0x00, 0x29, 0x40, 0x26, 0x05, 0x04, 0x03, 0x03, 0x00, 0x01, 0x01, 0x4c, 0x00, 0x01, 0x01, 0x50,
    0x4d, 0x02, 0x01, 0x00, 0x00, 0x03, 0x5f, 0x04, 0x01, 0x03, 0x03, 0x51, 0x03, 0x4e, 0x00, 0x00,
    0x00, 0x0a, 0x00, 0x0a, 0x11, 0x14, 0x11, 0x05, 0x0b, 0x19, 0x2b, 0x33, 0x35, 0x21, 0x11, 0x05,
    0x35, 0x25, 0x33, 0x11, 0x21, 0x15, 0x9c, 0x01, 0x67, 0xfe, 0xc2, 0x01, 0x4d, 0xa6, 0x01, 0x57,
    0x99, 0x04, 0x3c, 0xe3, 0xaa, 0xe5, 0xfb, 0x18, 0x99, 0x00, 0x00, 0x01, 0x00, 0x67, 0x00, 0x00,
    0x04, 0x0c, 0x05, 0x96, 0x00, 0x1e, 0x00, 0x2f, 0x40, 0x2c, 0x0f, 0x01, 0x02, 0x00, 0x01, 0x01,
    0x03, 0x02, 0x02, 0x4c, 0x00, 0x00, 0x00, 0x01, 0x61, 0x00, 0x01, 0x01, 0x56, 0x4d, 0x00, 0x02,
    0x02, 0x03, 0x5f, 0x04, 0x01, 0x03, 0x03, 0x51, 0x03, 0x4e, 0x00, 0x00, 0x00, 0x1e, 0x00, 0x1e,
    0x19, 0x25, 0x2a, 0x05, 0x0b, 0x19, 0x2b, 0x33, 0x35, 0x3e, 0x05, 0x35, 0x34, 0x26, 0x23, 0x22,
    0x06, 0x07, 0x27, 0x36, 0x36, 0x33, 0x32, 0x16, 0x15, 0x14, 0x06, 0x06, 0x07, 0x06, 0x06, 0x07,
    0x21, 0x15, 0x67, 0x33, 0x93, 0xa2, 0x9f, 0x80, 0x4f, 0x88, 0x79, 0x73, 0x95, 0x0d, 0xb8, 0x14,
    0xf7, 0xc2, 0xd5, 0xe5, 0x4b, 0x94, 0xd1, 0x73, 0x88, 0x1e, 0x02, 0xdf, 0x7f, 0x75, 0xb3, 0x91,
    0x7c, 0x7c, 0x88, 0x56, 0x74, 0x80, 0x7d, 0x71, 0x11, 0xa9, 0xc8, 0xc9, 0xb9, 0x52, 0xa2, 0xa2,
    0xaa, 0x5e, 0x97, 0x46, 0x99, 0x00, 0x00, 0x01, 0x00, 0x4e, 0xff, 0xec, 0x04, 0x19, 0x05, 0x96,
    0x00, 0x28, 0x00, 0x38, 0x40, 0x35, 0x1c, 0x01, 0x03, 0x04, 0x25, 0x01, 0x02, 0x03, 0x07, 0x06,
    0x02, 0x01, 0x02, 0x03, 0x4c, 0x00, 0x03, 0x00, 0x02, 0x01, 0x03, 0x02, 0x69, 0x00, 0x04, 0x04,
    0x05, 0x61, 0x00, 0x05, 0x05, 0x56, 0x4d, 0x00, 0x01, 0x01, 0x00, 0x61, 0x00, 0x00, 0x00, 0x57,
    0x00, 0x4e, 0x25, 0x24, 0x21, 0x24, 0x24, 0x22, 0x06, 0x0b, 0x1c, 0x2b, 0x01, 0x14, 0x06, 0x23,
    0x22, 0x26, 0x27, 0x37, 0x16, 0x21, 0x32, 0x36, 0x35, 0x34, 0x26, 0x23, 0x23, 0x35, 0x33, 0x32,
    0x36, 0x35, 0x34, 0x26, 0x23, 0x22, 0x06, 0x07, 0x27, 0x36, 0x36, 0x33, 0x32, 0x16, 0x15, 0x14,
    0x06, 0x07, 0x15, 0x16, 0x16, 0x04, 0x19, 0xf8, 0xe6, 0xd6, 0xff, 0x18, 0xba, 0x24, 0x01, 0x0f,
    0x88, 0x9b, 0xb1, 0xa7, 0x66, 0x62, 0x94, 0xa3, 0x85, 0x83, 0x77, 0x93, 0x0c, 0xb5, 0x14, 0xf7,
    0xc2, 0xd4, 0xeb, 0x97, 0x90, 0x9e, 0xb0, 0x01, 0x85, 0xc3, 0xd6, 0xc1, 0xbd, 0x11, 0xfa, 0x86,
    0x84, 0x73, 0x81, 0x9c, 0x81, 0x72, 0x71, 0x83, 0x7a, 0x6f, 0x0e, 0xad, 0xc2, 0xc5, 0xb0, 0x87,
    0xa9, 0x1e, 0x04, 0x11, 0xb2, 0x00, 0x00, 0x02, 0x00, 0x2f, 0x00, 0x00, 0x04, 0x37, 0x05, 0x81,
    0x00, 0x0a, 0x00, 0x12, 0x00, 0x37, 0x40, 0x34, 0x0c, 0x01, 0x03, 0x02, 0x05, 0x01, 0x01, 0x03,
    0x02, 0x4c, 0x07, 0x05, 0x02, 0x03, 0x06, 0x04, 0x02, 0x01, 0x00, 0x03, 0x01, 0x68, 0x00, 0x02,
    0x02, 0x50, 0x4d, 0x00, 0x00, 0x00, 0x51, 0x00, 0x4e, 0x0b, 0x0b, 0x00, 0x00, 0x0b, 0x12, 0x0b,
    0x12, 0x00, 0x0a, 0x00, 0x0a, 0x11, 0x12, 0x11, 0x11, 0x08, 0x0b, 0x1a, 0x2b, 0x01, 0x11, 0x23,
    0x11, 0x21, 0x35, 0x01, 0x33, 0x11, 0x33, 0x15, 0x25, 0x11, 0x06, 0x06, 0x07, 0x01, 0x06, 0x07,
    0x03, 0x71, 0xaa, 0xfd, 0x68, 0x02, 0x85, 0xbd, 0xc6, 0xfe, 0x90, 0x17, 0x1f, 0x0d, 0xfe, 0xbd,
    0x1c, 0x50, 0x01, 0x3f, 0xfe, 0xc1, 0x01, 0x3f, 0x8c, 0x03, 0xb6, 0xfc, 0x4c, 0x8e, 0x8e, 0x02,
    0xe9, 0x2c, 0x38, 0x13, 0xfe, 0x22, 0x29, 0x6b, 0x00, 0x01, 0x00, 0x52, 0xff, 0xec, 0x04, 0x1d,
    0x05, 0x81, 0x00, 0x1c, 0x00, 0x3d, 0x40, 0x3a, 0x18, 0x01, 0x02, 0x06, 0x07, 0x06, 0x02, 0x01,
    0x03, 0x02, 0x4c, 0x00, 0x03, 0x02, 0x01, 0x02, 0x03, 0x01, 0x80, 0x00, 0x06, 0x00, 0x02, 0x03,
    0x06, 0x02, 0x69, 0x00, 0x05, 0x05, 0x04, 0x5f, 0x00, 0x04, 0x04, 0x50, 0x4d, 0x00, 0x01, 0x01,
    0x00, 0x61, 0x00, 0x00, 0x00, 0x57, 0x00, 0x4e, 0x22, 0x11, 0x11, 0x12, 0x24, 0x24, 0x22, 0x07,
    0x0b, 0x1d, 0x2b, 0x01, 0x14, 0x00, 0x23, 0x22, 0x26, 0x27, 0x37, 0x16, 0x33, 0x32, 0x36, 0x35,
    0x34, 0x26, 0x23, 0x22, 0x06, 0x07, 0x23, 0x13, 0x21, 0x15, 0x21, 0x03, 0x36, 0x33, 0x32, 0x16,
    0x04, 0x1d, 0xfe, 0xf7, 0xeb, 0xc5, 0xf2, 0x20, 0xb6, 0x39, 0xec, 0x91, 0xa4, 0xa5, 0x8c, 0x49,
    0x7e, 0x3f, 0xb0, 0x2f, 0x03, 0x21, 0xfd, 0x83, 0x1b, 0x75, 0xae, 0xd0, 0xf7, 0x01, 0xcb, 0xdf,
    0xff, 0x00, 0xac, 0xa3, 0x15, 0xd1, 0xaf, 0x99, 0x85, 0xa4, 0x2e, 0x37, 0x02, 0xf6, 0x99, 0xfe,
    0x41, 0x5a, 0xf4, 0x00, 0x00, 0x02, 0x00, 0x68, 0xff, 0xec, 0x04, 0x19, 0x05, 0x96, 0x00, 0x16,
    0x00, 0x22, 0x00, 0x34, 0x40, 0x31, 0x0c, 0x0b, 0x02, 0x03, 0x02, 0x11, 0x01, 0x05, 0x04, 0x02,
    0x4c, 0x00, 0x03, 0x00, 0x04, 0x05, 0x03, 0x04, 0x69, 0x00, 0x02, 0x02, 0x01, 0x61, 0x00, 0x01,
    0x01, 0x56, 0x4d, 0x00, 0x05, 0x05, 0x00, 0x61, 0x00, 0x00, 0x00, 0x57, 0x00, 0x4e, 0x24, 0x24,
    0x24, 0x23, 0x24, 0x22, 0x06, 0x0b, 0x1c, 0x2b, 0x01, 0x14, 0x02, 0x23, 0x22, 0x02, 0x11, 0x10,
    0x00, 0x33, 0x20, 0x13, 0x07, 0x26, 0x23, 0x22, 0x02, 0x11, 0x36, 0x36, 0x33, 0x32, 0x16, 0x07,
    0x34, 0x26, 0x23, 0x22, 0x06, 0x15, 0x14, 0x16, 0x33, 0x32, 0x36, 0x04, 0x19, 0xf2, 0xd5, 0xee,
    0xfc, 0x01, 0x06, 0xf2, 0x01, 0x3f, 0x53, 0xac, 0x35, 0xb3, 0x9a, 0xa9, 0x31, 0xb2, 0x73, 0xc3,
    0xe5, 0xb7, 0x96, 0x86, 0x7e, 0x9b, 0xa1, 0x7e, 0x82, 0x94, 0x01, 0xcd, 0xdf, 0xfe, 0xfe, 0x01,
    0x62, 0x01, 0x52, 0x01, 0x6e, 0x01, 0x88, 0xfe, 0xe1, 0x1f, 0xac, 0xfe, 0xe1, 0xfe, 0xf0, 0x5b,
    0x5f, 0xf4, 0xd6, 0x99, 0xa6, 0x93, 0x81, 0xa3, 0xd0, 0xaf, 0x00, 0x01, 0x00, 0x69, 0x00, 0x00,
    0x04, 0x0c, 0x05, 0x81, 0x00, 0x0b, 0x00, 0x1f, 0x40, 0x1c, 0x00, 0x01, 0x01, 0x02, 0x01, 0x4c,
    0x00, 0x01, 0x01, 0x02, 0x5f, 0x00, 0x02, 0x02, 0x50, 0x4d, 0x00, 0x00, 0x00, 0x51, 0x00, 0x4e,
    0x11, 0x13, 0x14, 0x03, 0x0b, 0x19, 0x2b, 0x01, 0x0a, 0x02, 0x15, 0x23, 0x10, 0x12, 0x01, 0x21,
    0x35, 0x21, 0x04, 0x0c, 0xd8, 0xb2, 0x59, 0xbc, 0xe5, 0x01, 0x0c, 0xfd, 0x0b, 0x03, 0xa3, 0x04,
    0xef, 0xfe, 0xb6, 0xfe, 0x8a, 0xfe, 0x94, 0xc3, 0x01, 0x0e, 0x02, 0x55, 0x01, 0x85, 0x99, 0x00,
    0x00, 0x03, 0x00, 0x59, 0xff, 0xec, 0x04, 0x1a, 0x05, 0x96, 0x00, 0x19, 0x00, 0x24, 0x00, 0x2f,
    0x00, 0x30, 0x40, 0x2d, 0x16, 0x09, 0x02, 0x02, 0x05, 0x01, 0x4c, 0x00, 0x05, 0x00, 0x02, 0x03,
    0x05, 0x02, 0x69, 0x00, 0x04, 0x04, 0x01, 0x61, 0x00, 0x01, 0x01, 0x56, 0x4d, 0x00, 0x03, 0x03,
    0x00, 0x61, 0x00, 0x00, 0x00, 0x57, 0x00, 0x4e, 0x24, 0x23, 0x23, 0x2b, 0x2b, 0x22, 0x06, 0x0b,
    0x1c, 0x2b, 0x01, 0x14, 0x06, 0x23, 0x22, 0x26, 0x35, 0x34, 0x36, 0x37, 0x35, 0x26, 0x26, 0x35,
    0x34, 0x36, 0x33, 0x32, 0x16, 0x15, 0x14, 0x06, 0x07, 0x15, 0x16, 0x16, 0x07, 0x34, 0x26, 0x23,
    0x22, 0x06, 0x15, 0x10, 0x21, 0x32, 0x36, 0x03, 0x34, 0x21, 0x22, 0x06, 0x15, 0x14, 0x16, 0x33,
    0x32, 0x36, 0x04, 0x1a, 0xf8, 0xe8, 0xe2, 0xff, 0x9e, 0x7b, 0x73, 0x85, 0xf1, 0xcb, 0xd0, 0xf1,
    0x86, 0x74, 0x87, 0x96, 0xbb, 0x9c, 0x8d, 0x89, 0x9a, 0x01, 0x29, 0x93, 0x90, 0x23, 0xfe, 0xfa,
    0x7f, 0x85, 0x89, 0x7d, 0x7f, 0x85, 0x01, 0x89, 0xc3, 0xda, 0xd6, 0xc5, 0x8a, 0xbc, 0x14, 0x04,
    0x1b, 0xb4, 0x79, 0xa1, 0xc8, 0xc4, 0xa7, 0x79, 0xb4, 0x17, 0x04, 0x16, 0xb9, 0x7a, 0x83, 0x85,
    0x8f, 0x7d, 0xfe, 0xdd, 0x8d, 0x03, 0x21, 0xef, 0x78, 0x77, 0x79, 0x7f, 0x75, 0x00, 0x00, 0x02,
    0x00, 0x60, 0xff, 0xec, 0x04, 0x12, 0x05, 0x96, 0x00, 0x17, 0x00, 0x24, 0x00, 0x34, 0x40, 0x31,
    0x0c, 0x01, 0x05, 0x04, 0x07, 0x06, 0x02, 0x01, 0x02, 0x02, 0x4c, 0x00, 0x05, 0x00, 0x02, 0x01,
    0x05, 0x02, 0x69, 0x00, 0x04, 0x04, 0x03, 0x61, 0x00, 0x03, 0x03, 0x56, 0x4d, 0x00, 0x01, 0x01,
    0x00, 0x61, 0x00, 0x00, 0x00, 0x57, 0x00, 0x4e, 0x24, 0x24, 0x24, 0x24, 0x24, 0x22, 0x06, 0x0b,
    0x1c, 0x2b, 0x01, 0x10, 0x00, 0x23, 0x22, 0x26, 0x27, 0x37, 0x16, 0x33, 0x32, 0x12, 0x13, 0x06,
    0x06, 0x23, 0x22, 0x02, 0x35, 0x34, 0x36, 0x33, 0x32, 0x12, 0x07, 0x34, 0x26, 0x23, 0x22, 0x06,
    0x15, 0x14, 0x16, 0x33, 0x32, 0x36, 0x36, 0x04, 0x12, 0xfe, 0xf7, 0xf5, 0xa5, 0xc7, 0x2b, 0xac,
    0x36, 0xb8, 0x9b, 0xaa, 0x04, 0x28, 0xc2, 0x74, 0xbe, 0xe4, 0xf8, 0xdd, 0xeb, 0xf2, 0xc4, 0x9c,
    0x83, 0x82, 0x96, 0x96, 0x80, 0x4e, 0x86, 0x4d, 0x02, 0xdd, 0xfe, 0x95, 0xfe, 0x7a, 0x8b, 0x9b,
    0x1b, 0xb0, 0x01, 0x20, 0x01, 0x0b, 0x5a, 0x6d, 0x01, 0x04, 0xd7, 0xdd, 0xfd, 0xfe, 0xa4, 0xaf,
    0xaa, 0xcf, 0xb1, 0x97, 0x9a, 0xb3, 0x47, 0x82, 0x00, 0x02, 0x00, 0xbb, 0x00, 0x00, 0x01, 0x7e,
    0x04, 0x3a, 0x00, 0x03, 0x00, 0x07, 0x00, 0x2c, 0x40, 0x29, 0x05, 0x01, 0x03, 0x03, 0x02, 0x5f,
    0x00, 0x02, 0x02, 0x53, 0x4d, 0x00, 0x00, 0x00, 0x01, 0x5f, 0x04, 0x01, 0x01, 0x01, 0x51, 0x01,
    0x4e, 0x04, 0x04, 0x00, 0x00, 0x04, 0x07, 0x04, 0x07, 0x06, 0x05, 0x00, 0x03, 0x00, 0x03, 0x11,
    0x06, 0x0b, 0x17, 0x2b, 0x33, 0x35, 0x33, 0x15, 0x03, 0x35, 0x33, 0x15, 0xbb, 0xc3, 0xc3, 0xc3,
    0xcf, 0xcf, 0x03, 0x6b, 0xcf, 0xcf, 0x00, 0x02, 0x00, 0xb8, 0xfe, 0xfa, 0x01, 0x81, 0x04, 0x3a,
    0x00, 0x09, 0x00, 0x0d, 0x00, 0x5a, 0x4b, 0xb0, 0x0a, 0x50, 0x58, 0x40, 0x1d, 0x00, 0x00, 0x01,
    0x01, 0x00, 0x71, 0x06, 0x01, 0x04, 0x04, 0x03, 0x5f, 0x00, 0x03, 0x03, 0x39, 0x4d, 0x05, 0x01,
    0x02, 0x02, 0x01, 0x5f, 0x00, 0x01, 0x01, 0x37, 0x01, 0x4e, 0x1b, 0x40, 0x1c, 0x00, 0x00, 0x01,
    0x00, 0x86, 0x06, 0x01, 0x04, 0x04, 0x03, 0x5f, 0x00, 0x03, 0x03, 0x39, 0x4d, 0x05, 0x01, 0x02,
    0x02, 0x01, 0x5f, 0x00, 0x01, 0x01, 0x37, 0x01, 0x4e, 0x59, 0x40, 0x13, 0x0a, 0x0a, 0x00, 0x00,
    0x0a, 0x0d, 0x0a, 0x0d, 0x0c, 0x0b, 0x00, 0x09, 0x00, 0x09, 0x12, 0x14, 0x07, 0x09, 0x18, 0x2b,
    0x25, 0x15, 0x14, 0x06, 0x07, 0x23, 0x36, 0x35, 0x23, 0x35, 0x11, 0x35, 0x33, 0x15, 0x01, 0x81,
    0x26, 0x28, 0x7b, 0x5e, 0x58, 0xc3, 0xcf, 0x9c, 0x6a, 0x8e, 0x41, 0x88, 0x7e, 0xcf, 0x02, 0x9c,
    0xcf, 0xcf, 0x00, 0x01, 0x00, 0x65, 0x00, 0x9a, 0x04, 0x48, 0x04, 0xaa, 0x00, 0x06, 0x00, 0x06,
    0xb3, 0x06, 0x02, 0x01, 0x32, 0x2b, 0x13, 0x35, 0x01, 0x15, 0x01, 0x01, 0x15, 0x65, 0x03, 0xe3,
    0xfc, 0xa6, 0x03, 0x5a, 0x02, 0x3b, 0xcd, 0x01, 0xa2, 0x9a, 0xfe, 0x92, 0xfe, 0x91, 0x99, 0x00,
    0x00, 0x02, 0x00, 0x64, 0x01, 0x58, 0x04, 0x47, 0x03, 0xec, 0x00, 0x03, 0x00, 0x07, 0x00, 0x2f,
    0x40, 0x2c, 0x00, 0x02, 0x05, 0x01, 0x03, 0x00, 0x02, 0x03, 0x67, 0x00, 0x00, 0x01, 0x01, 0x00,
    0x57, 0x00, 0x00, 0x00, 0x01, 0x5f, 0x04, 0x01, 0x01, 0x00, 0x01, 0x4f, 0x04, 0x04, 0x00, 0x00,
    0x04, 0x07, 0x04, 0x07, 0x06, 0x05, 0x00, 0x03, 0x00, 0x03, 0x11, 0x06, 0x0b, 0x17, 0x2b, 0x13,
    0x35, 0x21, 0x15, 0x01, 0x35, 0x21, 0x15, 0x64, 0x03, 0xe3, 0xfc, 0x1d, 0x03, 0xe3, 0x01, 0x58,
    0x94, 0x94, 0x02, 0x00, 0x94, 0x94, 0x00, 0x01, 0x00, 0x65, 0x00, 0x9a, 0x04, 0x48, 0x04, 0xaa,
    0x00, 0x06, 0x00, 0x06, 0xb3, 0x04, 0x00, 0x01, 0x32, 0x2b, 0x37, 0x35, 0x01, 0x01, 0x35, 0x01,
    0x15, 0x65, 0x03, 0x5a, 0xfc, 0xa6, 0x03, 0xe3, 0x9a, 0x99, 0x01, 0x6f, 0x01, 0x6e, 0x9a, 0xfe,
    0x5e, 0xcd, 0x00, 0x02, 0x00, 0x54, 0x00, 0x00, 0x04, 0x27, 0x05, 0x96, 0x00, 0x1d, 0x00, 0x21,
    0x00, 0x36, 0x40, 0x33, 0x00, 0x02, 0x01, 0x00, 0x01, 0x02, 0x00, 0x80, 0x00, 0x00, 0x04, 0x01,
    0x00, 0x04, 0x7e, 0x00, 0x01, 0x01, 0x03, 0x61, 0x00, 0x03, 0x03, 0x56, 0x4d, 0x00, 0x04, 0x04,
    0x05, 0x5f, 0x06, 0x01, 0x05, 0x05, 0x51, 0x05, 0x4e, 0x1e, 0x1e, 0x1e, 0x21, 0x1e, 0x21, 0x13,
    0x22, 0x12, 0x1b, 0x18, 0x07, 0x0b, 0x1b, 0x2b, 0x01, 0x14, 0x06, 0x06, 0x07, 0x07, 0x06, 0x06,
    0x07, 0x23, 0x3e, 0x07, 0x35, 0x34, 0x26, 0x20, 0x06, 0x07, 0x27, 0x36, 0x24, 0x33, 0x32, 0x04,
    0x01, 0x35, 0x33, 0x15, 0x04, 0x27, 0x2c, 0x52, 0x5d, 0x50, 0x48, 0x46, 0x01, 0xaf, 0x02, 0x27,
    0x3e, 0x4e, 0x50, 0x4d, 0x3c, 0x25, 0x9b, 0xfe, 0xe8, 0xa4, 0x0e, 0xb8, 0x1a, 0x01, 0x04, 0xd6,
    0xdf, 0x01, 0x00, 0xfd, 0x8f, 0xc3, 0x04, 0x08, 0x4b, 0x76, 0x64, 0x44, 0x3b, 0x34, 0x73, 0x44,
    0x45, 0x68, 0x50, 0x3f, 0x39, 0x39, 0x46, 0x58, 0x3b, 0x72, 0x84, 0x8c, 0x7a, 0x0c, 0xc6, 0xd4,
    0xd3, 0xfb, 0x3d, 0xc9, 0xc9, 0x00, 0x00, 0x02, 0x00, 0xa1, 0xfe, 0xe5, 0x07, 0x6e, 0x05, 0xcc,
    0x00, 0x3f, 0x00, 0x4e, 0x00, 0x7e, 0x40, 0x0c, 0x15, 0x08, 0x02, 0x04, 0x09, 0x31, 0x30, 0x02,
    0x06, 0x00, 0x02, 0x4c, 0x4b, 0xb0, 0x17, 0x50, 0x58, 0x40, 0x27, 0x0a, 0x01, 0x04, 0x01, 0x01,
    0x00, 0x06, 0x04, 0x00, 0x6a, 0x00, 0x06, 0x00, 0x07, 0x06, 0x07, 0x65, 0x00, 0x05, 0x05, 0x08,
    0x61, 0x00, 0x08, 0x08, 0x52, 0x4d, 0x00, 0x09, 0x09, 0x02, 0x61, 0x03, 0x01, 0x02, 0x02, 0x59,
    0x09, 0x4e, 0x1b, 0x40, 0x2b, 0x0a, 0x01, 0x04, 0x01, 0x01, 0x00, 0x06, 0x04, 0x00, 0x6a, 0x00,
    0x06, 0x00, 0x07, 0x06, 0x07, 0x65, 0x00, 0x05, 0x05, 0x08, 0x61, 0x00, 0x08, 0x08, 0x52, 0x4d,
    0x00, 0x03, 0x03, 0x53, 0x4d, 0x00, 0x09, 0x09, 0x02, 0x61, 0x00, 0x02, 0x02, 0x59, 0x09, 0x4e,
    0x59, 0x40, 0x10, 0x4b, 0x49, 0x44, 0x42, 0x26, 0x25, 0x26, 0x26, 0x24, 0x13, 0x25, 0x26, 0x23,
    0x0b, 0x0b, 0x1f, 0x2b, 0x01, 0x14, 0x02, 0x06, 0x23, 0x22, 0x26, 0x35, 0x37, 0x23, 0x06, 0x06,
    0x23, 0x22, 0x26, 0x35, 0x34, 0x12, 0x36, 0x33, 0x32, 0x17, 0x33, 0x37, 0x33, 0x03, 0x06, 0x15,
    0x14, 0x33, 0x32, 0x36, 0x36, 0x35, 0x34, 0x02, 0x24, 0x23, 0x22, 0x04, 0x02, 0x15, 0x14, 0x12,
    0x04, 0x33, 0x32, 0x24, 0x37, 0x17, 0x06, 0x04, 0x23, 0x22, 0x24, 0x02, 0x35, 0x10, 0x12, 0x24,
    0x21, 0x32, 0x04, 0x12, 0x05, 0x34, 0x26, 0x23, 0x22, 0x06, 0x06, 0x15, 0x14, 0x16, 0x33, 0x32,
    0x36, 0x37, 0x36, 0x07, 0x6e, 0x73, 0xcd, 0x7f, 0x63, 0x6c, 0x03, 0x06, 0x42, 0xc3, 0x71, 0x9d,
    0xad, 0x81, 0xe8, 0x8d, 0xdb, 0x52, 0x06, 0x27, 0x9c, 0x74, 0x25, 0x51, 0x50, 0x87, 0x4e, 0x9a,
    0xfe, 0xde, 0xc2, 0xf2, 0xfe, 0x8c, 0xd4, 0x9d, 0x01, 0x29, 0xc6, 0x91, 0x01, 0x2a, 0xa0, 0x37,
    0x91, 0xfe, 0xad, 0xae, 0xf1, 0xfe, 0x97, 0xbf, 0xf9, 0x01, 0xba, 0x01, 0x12, 0xf1, 0x01, 0x5e,
    0xb9, 0xfd, 0xa2, 0x84, 0x6e, 0x65, 0x9d, 0x5a, 0x5f, 0x63, 0x7d, 0xd0, 0x28, 0x17, 0x02, 0xf3,
    0xba, 0xfe, 0xd3, 0xa4, 0x58, 0x58, 0x46, 0x7b, 0x7b, 0xcc, 0xb5, 0xa4, 0x01, 0x1a, 0xa6, 0xb6,
    0xa0, 0xfe, 0x06, 0xa4, 0x59, 0x5e, 0x8a, 0xf2, 0x93, 0xb3, 0x01, 0x15, 0x95, 0xd6, 0xfe, 0x6d,
    0xfa, 0xc1, 0xfe, 0xd9, 0x9e, 0x4b, 0x57, 0x70, 0x57, 0x5b, 0xbf, 0x01, 0x61, 0xe6, 0x01, 0x18,
    0x01, 0xca, 0xff, 0xb5, 0xfe, 0xb6, 0xe2, 0x66, 0x7d, 0x7f, 0xe1, 0x83, 0x78, 0x88, 0xd2, 0x9d,
    0x5c, 0x00, 0x00, 0x02, 0x00, 0x04, 0x00, 0x00, 0x05, 0x52, 0x05, 0x81, 0x00, 0x07, 0x00, 0x10,
    0x00, 0x26, 0x40, 0x23, 0x00, 0x04, 0x00, 0x00, 0x01, 0x04, 0x00, 0x68, 0x00, 0x02, 0x02, 0x50,
    0x4d, 0x05, 0x03, 0x02, 0x01, 0x01, 0x51, 0x01, 0x4e, 0x00, 0x00, 0x0d, 0x0c, 0x00, 0x07, 0x00,
    0x07, 0x11, 0x11, 0x11, 0x06, 0x0b, 0x19, 0x2b, 0x21, 0x03, 0x21, 0x03, 0x23, 0x01, 0x33, 0x01,
    0x01, 0x07, 0x06, 0x07, 0x03, 0x21, 0x03, 0x26, 0x27, 0x04, 0x8f, 0xa1, 0xfd, 0x7e, 0xa2, 0xc6,
    0x02, 0x3f, 0xd9, 0x02, 0x36, 0xfd, 0x5b, 0x09, 0x19, 0x31, 0xb4, 0x02, 0x0f, 0xb5, 0x1c, 0x1c,
    0x01, 0x9c, 0xfe, 0x64, 0x05, 0x81, 0xfa, 0x7f, 0x04, 0xf1, 0x1c, 0x53, 0x82, 0xfe, 0x31, 0x01,
    0xd1, 0x45, 0x57, 0x00, 0x00, 0x03, 0x00, 0xa8, 0x00, 0x00, 0x04, 0xea, 0x05, 0x81, 0x00, 0x0d,
    0x00, 0x15, 0x00, 0x1e, 0x00, 0x2f, 0x40, 0x2c, 0x0b, 0x01, 0x02, 0x05, 0x01, 0x4c, 0x00, 0x05,
    0x00, 0x02, 0x03, 0x05, 0x02, 0x67, 0x00, 0x04, 0x04, 0x01, 0x5f, 0x00, 0x01, 0x01, 0x50, 0x4d,
    0x00, 0x03, 0x03, 0x00, 0x5f, 0x00, 0x00, 0x00, 0x51, 0x00, 0x4e, 0x21, 0x24, 0x21, 0x28, 0x21,
    0x22, 0x06, 0x0b, 0x1c, 0x2b, 0x01, 0x14, 0x04, 0x23, 0x21, 0x11, 0x21, 0x20, 0x11, 0x14, 0x06,
    0x07, 0x16, 0x16, 0x07, 0x34, 0x21, 0x21, 0x11, 0x21, 0x32, 0x36, 0x03, 0x34, 0x26, 0x23, 0x21,
    0x11, 0x21, 0x32, 0x36, 0x04, 0xea, 0xfe, 0xee, 0xf4, 0xfd, 0xc4, 0x02, 0x00, 0x01, 0xf0, 0x8c,
    0x80, 0xa8, 0xb6, 0xc1, 0xfe, 0xa2, 0xfe, 0x9c, 0x01, 0x73, 0xaf, 0xa0, 0x51, 0x9c, 0x94, 0xfe,
    0xbf, 0x01, 0x41, 0x99, 0x97, 0x01, 0x8d, 0xbc, 0xd1, 0x05, 0x81, 0xfe, 0xaa, 0x7d, 0xaa, 0x1d,
    0x14, 0xb9, 0x7e, 0xf9, 0xfe, 0x04, 0x82, 0x02, 0xf9, 0x72, 0x62, 0xfe, 0x42, 0x73, 0x00, 0x01,
    0x00, 0x68, 0xff, 0xec, 0x05, 0x79, 0x05, 0x96, 0x00, 0x19, 0x00, 0x31, 0x40, 0x2e, 0x17, 0x16,
    0x09, 0x08, 0x04, 0x01, 0x00, 0x01, 0x4c, 0x04, 0x01, 0x00, 0x00, 0x03, 0x61, 0x00, 0x03, 0x03,
    0x56, 0x4d, 0x00, 0x01, 0x01, 0x02, 0x61, 0x00, 0x02, 0x02, 0x57, 0x02, 0x4e, 0x01, 0x00, 0x14,
    0x12, 0x0d, 0x0b, 0x07, 0x05, 0x00, 0x19, 0x01, 0x19, 0x05, 0x0b, 0x16, 0x2b, 0x01, 0x22, 0x00,
    0x11, 0x10, 0x00, 0x33, 0x20, 0x13, 0x17, 0x06, 0x04, 0x23, 0x22, 0x24, 0x02, 0x35, 0x10, 0x00,
    0x21, 0x32, 0x04, 0x17, 0x07, 0x26, 0x26, 0x03, 0x18, 0xea, 0xfe, 0xfc, 0x01, 0x0f, 0xe7, 0x01,
    0x28, 0x95, 0x9c, 0x57, 0xfe, 0xc5, 0xd0, 0xd5, 0xfe, 0xc9, 0xa3, 0x01, 0x6c, 0x01, 0x42, 0xe1,
    0x01, 0x2e, 0x47, 0xb5, 0x31, 0xd9, 0x04, 0xfa, 0xfe, 0xd3, 0xfe, 0xfa, 0xfe, 0xfd, 0xfe, 0xc5,
    0x01, 0x25, 0x4e, 0xb6, 0xbe, 0xb1, 0x01, 0x49, 0xe1, 0x01, 0x51, 0x01, 0x7e, 0xb0, 0xad, 0x3c,
    0x7b, 0x82, 0x00, 0x02, 0x00, 0xa8, 0x00, 0x00, 0x05, 0x65, 0x05, 0x81, 0x00, 0x09, 0x00, 0x13,
    0x00, 0x1f, 0x40, 0x1c, 0x00, 0x02, 0x02, 0x01, 0x5f, 0x00, 0x01, 0x01, 0x50, 0x4d, 0x00, 0x03,
    0x03, 0x00, 0x5f, 0x00, 0x00, 0x00, 0x51, 0x00, 0x4e, 0x21, 0x24, 0x21, 0x23, 0x04, 0x0b, 0x1a,
    0x2b, 0x01, 0x14, 0x02, 0x04, 0x23, 0x21, 0x11, 0x21, 0x20, 0x00, 0x03, 0x10, 0x00, 0x21, 0x21,
    0x11, 0x21, 0x32, 0x36, 0x12, 0x05, 0x65, 0xaa, 0xfe, 0xc8, 0xcc, 0xfd, 0xf1, 0x01, 0xd2, 0x01,
    0x66, 0x01, 0x85, 0xc0, 0xfe, 0xe1, 0xfe, 0xf0, 0xfe, 0xf1, 0x01, 0x3a, 0x9b, 0xeb, 0x7e, 0x02,
    0xcf, 0xda, 0xfe, 0xb9, 0xae, 0x05, 0x81, 0xfe, 0x99, 0xfe, 0xb5, 0x01, 0x06, 0x01, 0x13, 0xfb,
    0xb1, 0x88, 0x01, 0x00, 0x00, 0x01, 0x00, 0xa8, 0x00, 0x00, 0x04, 0xfe, 0x05, 0x81, 0x00, 0x0b,
    0x00, 0x2f, 0x40, 0x2c, 0x00, 0x02, 0x00, 0x03, 0x04, 0x02, 0x03, 0x67, 0x00, 0x01, 0x01, 0x00,
    0x5f, 0x00, 0x00, 0x00, 0x50, 0x4d, 0x00, 0x04, 0x04, 0x05, 0x5f, 0x06, 0x01, 0x05, 0x05, 0x51,
    0x05, 0x4e, 0x00, 0x00, 0x00, 0x0b, 0x00, 0x0b, 0x11, 0x11, 0x11, 0x11, 0x11, 0x07, 0x0b, 0x1b,
    0x2b, 0x33, 0x11, 0x21, 0x15, 0x21, 0x11, 0x21, 0x15, 0x21, 0x11, 0x21, 0x15, 0xa8, 0x04, 0x2d,
    0xfc, 0x92, 0x03, 0x32, 0xfc, 0xce, 0x03, 0x97, 0x05, 0x81, 0x9c, 0xfe, 0x3c, 0x9a, 0xfe, 0x15,
    0x9c, 0x00, 0x00, 0x01, 0x00, 0xa8, 0x00, 0x00, 0x04, 0x91, 0x05, 0x81, 0x00, 0x09, 0x00, 0x29,
    0x40, 0x26, 0x00, 0x00, 0x00, 0x01, 0x02, 0x00, 0x01, 0x67, 0x05, 0x01, 0x04, 0x04, 0x03, 0x5f,
    0x00, 0x03, 0x03, 0x50, 0x4d, 0x00, 0x02, 0x02, 0x51, 0x02, 0x4e, 0x00, 0x00, 0x00, 0x09, 0x00,
    0x09, 0x11, 0x11, 0x11, 0x11, 0x06, 0x0b, 0x1a, 0x2b, 0x01, 0x11, 0x21, 0x15, 0x21, 0x11, 0x23,
    0x11, 0x21, 0x15, 0x01, 0x67, 0x03, 0x12, 0xfc, 0xee, 0xbf, 0x03, 0xe9, 0x04, 0xe5, 0xfd, 0xf4,
    0x9e, 0xfd, 0xc5, 0x05, 0x81, 0x9c, 0x00, 0x01, 0x00, 0x67, 0xff, 0xec, 0x05, 0xa0, 0x05, 0x96,
    0x00, 0x1e, 0x00, 0x35, 0x40, 0x32, 0x07, 0x06, 0x02, 0x04, 0x01, 0x18, 0x13, 0x02, 0x02, 0x03,
    0x02, 0x4c, 0x00, 0x04, 0x00, 0x03, 0x02, 0x04, 0x03, 0x67, 0x00, 0x01, 0x01, 0x00, 0x61, 0x00,
    0x00, 0x00, 0x56, 0x4d, 0x00, 0x02, 0x02, 0x05, 0x61, 0x00, 0x05, 0x05, 0x57, 0x05, 0x4e, 0x23,
    0x11, 0x13, 0x24, 0x25, 0x22, 0x06, 0x0b, 0x1c, 0x2b, 0x13, 0x10, 0x00, 0x21, 0x32, 0x04, 0x17,
    0x07, 0x26, 0x26, 0x23, 0x22, 0x00, 0x11, 0x10, 0x00, 0x33, 0x32, 0x36, 0x37, 0x35, 0x21, 0x35,
    0x21, 0x11, 0x06, 0x04, 0x23, 0x22, 0x24, 0x02, 0x67, 0x01, 0x70, 0x01, 0x4d, 0xea, 0x01, 0x24,
    0x4f, 0xb6, 0x3c, 0xd3, 0x9d, 0xf4, 0xfe, 0xfe, 0x01, 0x12, 0xf2, 0x8a, 0xef, 0x4a, 0xfe, 0x5b,
    0x02, 0x55, 0x70, 0xfe, 0xbb, 0xbe, 0xdd, 0xfe, 0xc0, 0xa9, 0x02, 0xc7, 0x01, 0x57, 0x01, 0x78,
    0x9e, 0xae, 0x36, 0x78, 0x6e, 0xfe, 0xd9, 0xfe, 0xf4, 0xfe, 0xf5, 0xfe, 0xcb, 0x54, 0x48, 0xfe,
    0xa0, 0xfe, 0x1a, 0x72, 0x7d, 0xb0, 0x01, 0x4b, 0x00, 0x01, 0x00, 0xa8, 0x00, 0x00, 0x05, 0x20,
    0x05, 0x81, 0x00, 0x0b, 0x00, 0x27, 0x40, 0x24, 0x00, 0x03, 0x00, 0x00, 0x01, 0x03, 0x00, 0x67,
    0x04, 0x01, 0x02, 0x02, 0x50, 0x4d, 0x06, 0x05, 0x02, 0x01, 0x01, 0x51, 0x01, 0x4e, 0x00, 0x00,
    0x00, 0x0b, 0x00, 0x0b, 0x11, 0x11, 0x11, 0x11, 0x11, 0x07, 0x0b, 0x1b, 0x2b, 0x21, 0x11, 0x21,
    0x11, 0x23, 0x11, 0x33, 0x11, 0x21, 0x11, 0x33, 0x11, 0x04, 0x61, 0xfd, 0x06, 0xbf, 0xbf, 0x02,
    0xfa, 0xbf, 0x02, 0x8d, 0xfd, 0x73, 0x05, 0x81, 0xfd, 0xac, 0x02, 0x54, 0xfa, 0x7f, 0x00, 0x01,
    0x00, 0xbd, 0x00, 0x00, 0x01, 0x7c, 0x05, 0x81, 0x00, 0x03, 0x00, 0x19, 0x40, 0x16, 0x00, 0x00,
    0x00, 0x50, 0x4d, 0x02, 0x01, 0x01, 0x01, 0x51, 0x01, 0x4e, 0x00, 0x00, 0x00, 0x03, 0x00, 0x03,
    0x11, 0x03, 0x0b, 0x17, 0x2b, 0x33, 0x11, 0x33, 0x11, 0xbd, 0xbf, 0x05, 0x81, 0xfa, 0x7f, 0x00,
    0x00, 0x01, 0x00, 0x20, 0xff, 0xec, 0x03, 0x68, 0x05, 0x81, 0x00, 0x10, 0x00, 0x2f, 0x40, 0x2c,
    0x03, 0x02, 0x02, 0x01, 0x02, 0x01, 0x4c, 0x00, 0x02, 0x02, 0x03, 0x5f, 0x00, 0x03, 0x03, 0x50,
    0x4d, 0x00, 0x01, 0x01, 0x00, 0x61, 0x04, 0x01, 0x00, 0x00, 0x57, 0x00, 0x4e, 0x01, 0x00, 0x0d,
    0x0c, 0x0b, 0x0a, 0x07, 0x05, 0x00, 0x10, 0x01, 0x10, 0x05, 0x0b, 0x16, 0x2b, 0x05, 0x20, 0x03,
    0x37, 0x16, 0x16, 0x33, 0x32, 0x36, 0x35, 0x11, 0x21, 0x35, 0x21, 0x11, 0x14, 0x06, 0x01, 0xc9,
    0xfe, 0x9a, 0x43, 0xbb, 0x12, 0x7e, 0x5f, 0x68, 0x78, 0xfe, 0xf1, 0x01, 0xcd, 0xde, 0x14, 0x01,
    0x72, 0x1f, 0x74, 0x82, 0x8f, 0x8a, 0x03, 0x45, 0x9c, 0xfc, 0x23, 0xcd, 0xeb, 0x00, 0x00, 0x01,
    0x00, 0xa8, 0x00, 0x00, 0x05, 0x3f, 0x05, 0x81, 0x00, 0x0b, 0x00, 0x26, 0x40, 0x23, 0x0a, 0x07,
    0x02, 0x01, 0x04, 0x00, 0x01, 0x01, 0x4c, 0x02, 0x01, 0x01, 0x01, 0x50, 0x4d, 0x04, 0x03, 0x02,
    0x00, 0x00, 0x51, 0x00, 0x4e, 0x00, 0x00, 0x00, 0x0b, 0x00, 0x0b, 0x12, 0x11, 0x13, 0x05, 0x0b,
    0x19, 0x2b, 0x21, 0x01, 0x07, 0x11, 0x23, 0x11, 0x33, 0x11, 0x01, 0x33, 0x01, 0x01, 0x04, 0x52,
    0xfd, 0xcd, 0xb8, 0xbf, 0xbf, 0x02, 0xa7, 0xe1, 0xfd, 0xa8, 0x02, 0xa8, 0x02, 0xa8, 0x8c, 0xfd,
    0xe4, 0x05, 0x81, 0xfd, 0x3e, 0x02, 0xc2, 0xfd, 0x9c, 0xfc, 0xe3, 0x00, 0x00, 0x01, 0x00, 0xa8,
    0x00, 0x00, 0x04, 0x2f, 0x05, 0x81, 0x00, 0x05, 0x00, 0x1f, 0x40, 0x1c, 0x00, 0x00, 0x00, 0x50,
    0x4d, 0x00, 0x01, 0x01, 0x02, 0x5f, 0x03, 0x01, 0x02, 0x02, 0x51, 0x02, 0x4e, 0x00, 0x00, 0x00,
    0x05, 0x00, 0x05, 0x11, 0x11, 0x04, 0x0b, 0x18, 0x2b, 0x33, 0x11, 0x33, 0x11, 0x21, 0x15, 0xa8,
    0xbf, 0x02, 0xc8, 0x05, 0x81, 0xfb, 0x1b, 0x9c, 0x00, 0x01, 0x00, 0xa8, 0x00, 0x00, 0x06, 0x02,
    0x05, 0x81, 0x00, 0x1a, 0x00, 0x27, 0x40, 0x24, 0x14, 0x0a, 0x03, 0x03, 0x00, 0x02, 0x01, 0x4c,
    0x03, 0x01, 0x02, 0x02, 0x50, 0x4d, 0x05, 0x04, 0x01, 0x03, 0x00, 0x00, 0x51, 0x00, 0x4e, 0x00,
    0x00, 0x00, 0x1a, 0x00, 0x1a, 0x18, 0x11, 0x16, 0x16, 0x06, 0x0b, 0x1a, 0x2b, 0x21, 0x11, 0x34,
    0x37, 0x06, 0x07, 0x01, 0x23, 0x01, 0x27, 0x27, 0x17, 0x17, 0x11, 0x23, 0x11, 0x33, 0x01, 0x16,
    0x16, 0x17, 0x36, 0x36, 0x37, 0x01, 0x33, 0x11, 0x05, 0x56, 0x09, 0x31, 0x27, 0xfe, 0x94, 0x86,
    0xfe, 0x8f, 0x38, 0x21, 0x03, 0x04, 0xaa, 0xfb, 0x01, 0x77, 0x14, 0x25, 0x06, 0x08, 0x33, 0x09,
    0x01, 0x70, 0xf5, 0x03, 0xac, 0x9c, 0x90, 0xb3, 0x65, 0xfc, 0x40, 0x03, 0xc0, 0xaa, 0x6e, 0x6f,
    0xbd, 0xfc, 0x54, 0x05, 0x81, 0xfc, 0x2f, 0x3b, 0x87, 0x1e, 0x28, 0xa3, 0x15, 0x03, 0xd1, 0xfa,
    0x7f, 0x00, 0x00, 0x01, 0x00, 0xa8, 0x00, 0x00, 0x05, 0x20, 0x05, 0x81, 0x00, 0x0d, 0x00, 0x24,
    0x40, 0x21, 0x08, 0x01, 0x02, 0x00, 0x01, 0x01, 0x4c, 0x02, 0x01, 0x01, 0x01, 0x50, 0x4d, 0x04,
    0x03, 0x02, 0x00, 0x00, 0x51, 0x00, 0x4e, 0x00, 0x00, 0x00, 0x0d, 0x00, 0x0d, 0x14, 0x11, 0x14,
    0x05, 0x0b, 0x19, 0x2b, 0x21, 0x01, 0x17, 0x17, 0x11, 0x23, 0x11, 0x33, 0x01, 0x26, 0x35, 0x11,
    0x33, 0x11, 0x04, 0x3a, 0xfd, 0x0e, 0x05, 0x05, 0xaa, 0xde, 0x02, 0xfa, 0x0c, 0xac, 0x04, 0xb0,
    0x61, 0xa7, 0xfc, 0x58, 0x05, 0x81, 0xfb, 0x48, 0xc4, 0x58, 0x03, 0x9c, 0xfa, 0x7f, 0x00, 0x02,
    0x00, 0x61, 0xff, 0xec, 0x05, 0xd7, 0x05, 0x96, 0x00, 0x0e, 0x00, 0x1a, 0x00, 0x1f, 0x40, 0x1c,
    0x00, 0x02, 0x02, 0x01, 0x61, 0x00, 0x01, 0x01, 0x56, 0x4d, 0x00, 0x03, 0x03, 0x00, 0x61, 0x00,
    0x00, 0x00, 0x57, 0x00, 0x4e, 0x24, 0x25, 0x25, 0x23, 0x04, 0x0b, 0x1a, 0x2b, 0x01, 0x14, 0x02,
    0x04, 0x23, 0x22, 0x24, 0x02, 0x35, 0x10, 0x00, 0x21, 0x32, 0x04, 0x12, 0x07, 0x10, 0x00, 0x23,
    0x22, 0x00, 0x11, 0x10, 0x00, 0x33, 0x32, 0x00, 0x05, 0xd7, 0xa9, 0xfe, 0xc4, 0xd7, 0xd9, 0xfe,
    0xc5, 0xa6, 0x01, 0x72, 0x01, 0x4a, 0xd7, 0x01, 0x3c, 0xa7, 0xc3, 0xfe, 0xf9, 0xf0, 0xf2, 0xfe,
    0xf8, 0x01, 0x0b, 0xed, 0xf4, 0x01, 0x05, 0x02, 0xc7, 0xdd, 0xfe, 0xb4, 0xb2, 0xb0, 0x01, 0x4d,
    0xde, 0x01, 0x52, 0x01, 0x7d, 0xab, 0xfe, 0xba, 0xde, 0x01, 0x07, 0x01, 0x2c, 0xfe, 0xd8, 0xfe,
    0xf5, 0xfe, 0xf7, 0xfe, 0xc9, 0x01, 0x2d, 0x00, 0x00, 0x02, 0x00, 0xa8, 0x00, 0x00, 0x04, 0xea,
    0x05, 0x81, 0x00, 0x0a, 0x00, 0x11, 0x00, 0x23, 0x40, 0x20, 0x00, 0x04, 0x00, 0x00, 0x01, 0x04,
    0x00, 0x67, 0x00, 0x03, 0x03, 0x02, 0x5f, 0x00, 0x02, 0x02, 0x50, 0x4d, 0x00, 0x01, 0x01, 0x51,
    0x01, 0x4e, 0x21, 0x23, 0x21, 0x11, 0x22, 0x05, 0x0b, 0x1b, 0x2b, 0x01, 0x14, 0x04, 0x23, 0x21,
    0x11, 0x23, 0x11, 0x21, 0x32, 0x04, 0x07, 0x10, 0x21, 0x21, 0x11, 0x21, 0x20, 0x04, 0xea, 0xfe,
    0xfb, 0xe0, 0xfe, 0x62, 0xbf, 0x02, 0x51, 0xed, 0x01, 0x04, 0xc0, 0xfe, 0xb8, 0xfe, 0x85, 0x01,
    0x83, 0x01, 0x40, 0x03, 0xd9, 0xc8, 0xec, 0xfd, 0xdb, 0x05, 0x81, 0xde, 0xcc, 0x01, 0x11, 0xfd,
    0xd4, 0x00, 0x00, 0x02, 0x00, 0x61, 0xfe, 0x7d, 0x05, 0xd7, 0x05, 0x96, 0x00, 0x18, 0x00, 0x24,
    0x00, 0xda, 0x40, 0x0e, 0x03, 0x01, 0x02, 0x05, 0x08, 0x01, 0x00, 0x02, 0x09, 0x01, 0x01, 0x00,
    0x03, 0x4c, 0x4b, 0xb0, 0x0a, 0x50, 0x58, 0x40, 0x1f, 0x00, 0x04, 0x04, 0x03, 0x61, 0x00, 0x03,
    0x03, 0x56, 0x4d, 0x00, 0x05, 0x05, 0x02, 0x61, 0x00, 0x02, 0x02, 0x51, 0x4d, 0x00, 0x00, 0x00,
    0x01, 0x61, 0x00, 0x01, 0x01, 0x55, 0x01, 0x4e, 0x1b, 0x4b, 0xb0, 0x0c, 0x50, 0x58, 0x40, 0x1f,
    0x00, 0x04, 0x04, 0x03, 0x61, 0x00, 0x03, 0x03, 0x56, 0x4d, 0x00, 0x05, 0x05, 0x02, 0x61, 0x00,
    0x02, 0x02, 0x57, 0x4d, 0x00, 0x00, 0x00, 0x01, 0x61, 0x00, 0x01, 0x01, 0x55, 0x01, 0x4e, 0x1b,
    0x4b, 0xb0, 0x0e, 0x50, 0x58, 0x40, 0x1f, 0x00, 0x04, 0x04, 0x03, 0x61, 0x00, 0x03, 0x03, 0x56,
    0x4d, 0x00, 0x05, 0x05, 0x02, 0x61, 0x00, 0x02, 0x02, 0x51, 0x4d, 0x00, 0x00, 0x00, 0x01, 0x61,
    0x00, 0x01, 0x01, 0x55, 0x01, 0x4e, 0x1b, 0x4b, 0xb0, 0x1b, 0x50, 0x58, 0x40, 0x1f, 0x00, 0x04,
    0x04, 0x03, 0x61, 0x00, 0x03, 0x03, 0x56, 0x4d, 0x00, 0x05, 0x05, 0x02, 0x61, 0x00, 0x02, 0x02,
    0x57, 0x4d, 0x00, 0x00, 0x00, 0x01, 0x61, 0x00, 0x01, 0x01, 0x55, 0x01, 0x4e, 0x1b, 0x40, 0x1c,
    0x00, 0x00, 0x00, 0x01, 0x00, 0x01, 0x65, 0x00, 0x04, 0x04, 0x03, 0x61, 0x00, 0x03, 0x03, 0x56,
    0x4d, 0x00, 0x05, 0x05, 0x02, 0x61, 0x00, 0x02, 0x02, 0x57, 0x02, 0x4e, 0x59, 0x59, 0x59, 0x59,
    0x40, 0x09, 0x24, 0x25, 0x25, 0x12, 0x23, 0x25, 0x06, 0x0b, 0x1c, 0x2b, 0x01, 0x10, 0x00, 0x05,
    0x16, 0x16, 0x33, 0x32, 0x37, 0x15, 0x06, 0x23, 0x22, 0x26, 0x27, 0x26, 0x24, 0x02, 0x35, 0x10,
    0x00, 0x21, 0x32, 0x04, 0x12, 0x07, 0x10, 0x00, 0x23, 0x22, 0x00, 0x11, 0x10, 0x00, 0x33, 0x32,
    0x00, 0x05, 0xd7, 0xfe, 0xd4, 0xfe, 0xf5, 0x29, 0x85, 0x66, 0x37, 0x3c, 0x5d, 0x55, 0x97, 0xc3,
    0x3e, 0xc6, 0xfe, 0xe1, 0x97, 0x01, 0x72, 0x01, 0x4a, 0xd7, 0x01, 0x3c, 0xa7, 0xc3, 0xfe, 0xf9,
    0xf0, 0xf2, 0xfe, 0xf8, 0x01, 0x0b, 0xed, 0xf4, 0x01, 0x05, 0x02, 0xc7, 0xfe, 0xd6, 0xfe, 0x80,
    0x23, 0x7e, 0x70, 0x0d, 0x86, 0x16, 0xab, 0xc8, 0x0a, 0xb5, 0x01, 0x43, 0xd5, 0x01, 0x52, 0x01,
    0x7d, 0xab, 0xfe, 0xba, 0xde, 0x01, 0x07, 0x01, 0x2c, 0xfe, 0xd8, 0xfe, 0xf5, 0xfe, 0xf7, 0xfe,
    0xc9, 0x01, 0x2d, 0x00, 0x00, 0x02, 0x00, 0xa8, 0x00, 0x00, 0x05, 0x68, 0x05, 0x81, 0x00, 0x0d,
    0x00, 0x16, 0x00, 0x33, 0x40, 0x30, 0x0c, 0x01, 0x00, 0x05, 0x01, 0x4c, 0x00, 0x05, 0x00, 0x00,
    0x01, 0x05, 0x00, 0x67, 0x00, 0x04, 0x04, 0x02, 0x5f, 0x00, 0x02, 0x02, 0x50, 0x4d, 0x06, 0x03,
    0x02, 0x01, 0x01, 0x51, 0x01, 0x4e, 0x00, 0x00, 0x15, 0x13, 0x12, 0x10, 0x00, 0x0d, 0x00, 0x0d,
    0x21, 0x11, 0x11, 0x07, 0x0b, 0x19, 0x2b, 0x21, 0x01, 0x21, 0x11, 0x23, 0x11, 0x21, 0x32, 0x04,
    0x15, 0x14, 0x06, 0x07, 0x01, 0x03, 0x34, 0x26, 0x23, 0x21, 0x11, 0x21, 0x32, 0x36, 0x04, 0x8c,
    0xfe, 0x92, 0xfe, 0x49, 0xbf, 0x02, 0x97, 0xee, 0x01, 0x03, 0xb7, 0xa1, 0x01, 0x90, 0xf8, 0xa7,
    0x9d, 0xfe, 0x3b, 0x01, 0xcd, 0x97, 0xa5, 0x02, 0x49, 0xfd, 0xb7, 0x05, 0x81, 0xd5, 0xbe, 0x9d,
    0xd6, 0x1c, 0xfd, 0xa1, 0x03, 0xec, 0x7b, 0x81, 0xfd, 0xf8, 0x8d, 0x00, 0x00, 0x01, 0x00, 0x5d,
    0xff, 0xec, 0x04, 0xf8, 0x05, 0x96, 0x00, 0x2d, 0x00, 0x28, 0x40, 0x25, 0x1d, 0x1c, 0x06, 0x05,
    0x04, 0x01, 0x03, 0x01, 0x4c, 0x00, 0x03, 0x03, 0x02, 0x61, 0x00, 0x02, 0x02, 0x56, 0x4d, 0x00,
    0x01, 0x01, 0x00, 0x61, 0x00, 0x00, 0x00, 0x57, 0x00, 0x4e, 0x25, 0x2e, 0x24, 0x22, 0x04, 0x0b,
    0x1a, 0x2b, 0x01, 0x14, 0x04, 0x21, 0x20, 0x03, 0x37, 0x16, 0x16, 0x33, 0x32, 0x36, 0x35, 0x34,
    0x2e, 0x02, 0x27, 0x2e, 0x03, 0x35, 0x34, 0x24, 0x21, 0x32, 0x16, 0x17, 0x07, 0x26, 0x26, 0x23,
    0x22, 0x06, 0x15, 0x14, 0x16, 0x16, 0x17, 0x1e, 0x05, 0x04, 0xf8, 0xfe, 0xcf, 0xfe, 0xeb, 0xfd,
    0xfd, 0x52, 0xb9, 0x20, 0xd0, 0xb3, 0xb9, 0xc9, 0x3f, 0x72, 0x9e, 0x60, 0xa7, 0xad, 0x64, 0x35,
    0x01, 0x15, 0x01, 0x02, 0xf0, 0xfe, 0x33, 0xbc, 0x1f, 0xae, 0x9a, 0xa9, 0xb2, 0x45, 0x82, 0xc2,
    0x41, 0x81, 0x76, 0x67, 0x4c, 0x2b, 0x01, 0x85, 0xc3, 0xd6, 0x01, 0x66, 0x25, 0x7f, 0x77, 0x7f,
    0x7b, 0x45, 0x56, 0x38, 0x26, 0x16, 0x25, 0x4a, 0x5b, 0x7a, 0x4f, 0xb5, 0xc4, 0x93, 0xb1, 0x21,
    0x70, 0x65, 0x70, 0x6f, 0x41, 0x55, 0x3b, 0x2b, 0x0f, 0x1f, 0x2b, 0x3a, 0x54, 0x72, 0x00, 0x01,
    0x00, 0x2e, 0x00, 0x00, 0x04, 0xb4, 0x05, 0x81, 0x00, 0x07, 0x00, 0x21, 0x40, 0x1e, 0x04, 0x03,
    0x02, 0x01, 0x01, 0x02, 0x5f, 0x00, 0x02, 0x02, 0x50, 0x4d, 0x00, 0x00, 0x00, 0x51, 0x00, 0x4e,
    0x00, 0x00, 0x00, 0x07, 0x00, 0x07, 0x11, 0x11, 0x11, 0x05, 0x0b, 0x19, 0x2b, 0x01, 0x11, 0x23,
    0x11, 0x21, 0x35, 0x21, 0x15, 0x02, 0xd0, 0xbe, 0xfe, 0x1c, 0x04, 0x86, 0x04, 0xe5, 0xfb, 0x1b,
    0x04, 0xe5, 0x9c, 0x9c, 0x00, 0x01, 0x00, 0x9e, 0xff, 0xec, 0x05, 0x29, 0x05, 0x81, 0x00, 0x13,
    0x00, 0x24, 0x40, 0x21, 0x03, 0x01, 0x01, 0x01, 0x50, 0x4d, 0x00, 0x02, 0x02, 0x00, 0x61, 0x04,
    0x01, 0x00, 0x00, 0x57, 0x00, 0x4e, 0x01, 0x00, 0x0f, 0x0e, 0x0b, 0x09, 0x06, 0x05, 0x00, 0x13,
    0x01, 0x13, 0x05, 0x0b, 0x16, 0x2b, 0x05, 0x22, 0x24, 0x26, 0x35, 0x11, 0x33, 0x11, 0x14, 0x16,
    0x33, 0x32, 0x36, 0x35, 0x11, 0x33, 0x11, 0x14, 0x06, 0x04, 0x02, 0xdb, 0xad, 0xfe, 0xfe, 0x8e,
    0xbf, 0xc4, 0xb9, 0xbe, 0xd3, 0xbe, 0x91, 0xfe, 0xf7, 0x14, 0x7e, 0xf0, 0xa6, 0x03, 0x81, 0xfc,
    0x8f, 0xc1, 0xc8, 0xcf, 0xc7, 0x03, 0x64, 0xfc, 0x91, 0xab, 0xf8, 0x83, 0x00, 0x01, 0x00, 0x09,
    0x00, 0x00, 0x05, 0x4d, 0x05, 0x81, 0x00, 0x08, 0x00, 0x1b, 0x40, 0x18, 0x05, 0x01, 0x00, 0x01,
    0x01, 0x4c, 0x02, 0x01, 0x01, 0x01, 0x50, 0x4d, 0x00, 0x00, 0x00, 0x51, 0x00, 0x4e, 0x14, 0x11,
    0x10, 0x03, 0x0b, 0x19, 0x2b, 0x21, 0x23, 0x01, 0x33, 0x01, 0x17, 0x37, 0x01, 0x33, 0x03, 0x0e,
    0xc6, 0xfd, 0xc1, 0xc9, 0x01, 0x86, 0x54, 0x54, 0x01, 0x84, 0xc9, 0x05, 0x81, 0xfc, 0x20, 0xf9,
    0xf9, 0x03, 0xe0, 0x00, 0x00, 0x01, 0x00, 0x09, 0x00, 0x00, 0x07, 0x86, 0x05, 0x81, 0x00, 0x19,
    0x00, 0x21, 0x40, 0x1e, 0x14, 0x0d, 0x04, 0x03, 0x00, 0x02, 0x01, 0x4c, 0x04, 0x03, 0x02, 0x02,
    0x02, 0x50, 0x4d, 0x01, 0x01, 0x00, 0x00, 0x51, 0x00, 0x4e, 0x17, 0x16, 0x11, 0x16, 0x10, 0x05,
    0x0b, 0x1b, 0x2b, 0x21, 0x23, 0x03, 0x26, 0x27, 0x06, 0x06, 0x03, 0x23, 0x01, 0x33, 0x13, 0x16,
    0x17, 0x36, 0x12, 0x13, 0x33, 0x13, 0x16, 0x17, 0x37, 0x36, 0x36, 0x01, 0x33, 0x05, 0xe7, 0xe4,
    0xf4, 0x18, 0x2e, 0x1a, 0x24, 0xff, 0xe4, 0xfe, 0x61, 0xc7, 0xfd, 0x2d, 0x26, 0x18, 0x3f, 0xf6,
    0xb7, 0xf5, 0x38, 0x20, 0x09, 0x1b, 0x22, 0x01, 0x08, 0xc7, 0x03, 0x7f, 0x54, 0xd9, 0x74, 0x9c,
    0xfc, 0x64, 0x05, 0x81, 0xfc, 0x81, 0xa8, 0xb2, 0x6e, 0x01, 0x04, 0x03, 0x67, 0xfc, 0x93, 0xd7,
    0x95, 0x23, 0x73, 0x91, 0x03, 0xb2, 0x00, 0x01, 0x00, 0x2e, 0x00, 0x00, 0x05, 0x2b, 0x05, 0x81,
    0x00, 0x0b, 0x00, 0x26, 0x40, 0x23, 0x0a, 0x07, 0x04, 0x01, 0x04, 0x00, 0x01, 0x01, 0x4c, 0x02,
    0x01, 0x01, 0x01, 0x50, 0x4d, 0x04, 0x03, 0x02, 0x00, 0x00, 0x51, 0x00, 0x4e, 0x00, 0x00, 0x00,
    0x0b, 0x00, 0x0b, 0x12, 0x12, 0x12, 0x05, 0x0b, 0x19, 0x2b, 0x21, 0x01, 0x01, 0x23, 0x01, 0x01,
    0x33, 0x01, 0x01, 0x33, 0x01, 0x01, 0x04, 0x58, 0xfe, 0x59, 0xfe, 0x50, 0xd3, 0x02, 0x18, 0xfe,
    0x11, 0xd3, 0x01, 0x88, 0x01, 0x7d, 0xd3, 0xfe, 0x1e, 0x02, 0x0b, 0x02, 0x68, 0xfd, 0x98, 0x02,
    0xdc, 0x02, 0xa5, 0xfd, 0xd7, 0x02, 0x29, 0xfd, 0x62, 0xfd, 0x1d, 0x00, 0x00, 0x01, 0x00, 0x2d,
    0x00, 0x00, 0x05, 0x29, 0x05, 0x81, 0x00, 0x08, 0x00, 0x1d, 0x40, 0x1a, 0x06, 0x03, 0x00, 0x03,
    0x00, 0x01, 0x01, 0x4c, 0x02, 0x01, 0x01, 0x01, 0x50, 0x4d, 0x00, 0x00, 0x00, 0x51, 0x00, 0x4e,
    0x12, 0x12, 0x11, 0x03, 0x0b, 0x19, 0x2b, 0x01, 0x11, 0x23, 0x11, 0x01, 0x33, 0x01, 0x01, 0x33,
    0x03, 0x09, 0xbe, 0xfd, 0xe2, 0xd2, 0x01, 0xad, 0x01, 0xab, 0xd2, 0x02, 0x48, 0xfd, 0xb8, 0x02,
    0x48, 0x03, 0x39, 0xfd, 0x61, 0x02, 0x9f, 0x00, 0x00, 0x01, 0x00, 0x41, 0x00, 0x00, 0x04, 0xa3,
    0x05, 0x81, 0x00, 0x09, 0x00, 0x29, 0x40, 0x26, 0x07, 0x01, 0x01, 0x02, 0x02, 0x01, 0x00, 0x03,
    0x02, 0x4c, 0x00, 0x01, 0x01, 0x02, 0x5f, 0x00, 0x02, 0x02, 0x50, 0x4d, 0x00, 0x03, 0x03, 0x00,
    0x5f, 0x00, 0x00, 0x00, 0x51, 0x00, 0x4e, 0x12, 0x11, 0x12, 0x10, 0x04, 0x0b, 0x1a, 0x2b, 0x21,
    0x21, 0x35, 0x01, 0x21, 0x35, 0x21, 0x15, 0x01, 0x21, 0x04, 0xa3, 0xfb, 0x9e, 0x03, 0x5a, 0xfc,
    0xef, 0x03, 0xea, 0xfc, 0xa6, 0x03, 0x89, 0x8f, 0x04, 0x56, 0x9c, 0x8b, 0xfb, 0xa6, 0x00, 0x01,
    0x00, 0x92, 0xfe, 0x57, 0x02, 0x29, 0x05, 0xcc, 0x00, 0x07, 0x00, 0x25, 0x40, 0x22, 0x00, 0x01,
    0x01, 0x00, 0x5f, 0x00, 0x00, 0x00, 0x52, 0x4d, 0x00, 0x02, 0x02, 0x03, 0x5f, 0x04, 0x01, 0x03,
    0x03, 0x55, 0x03, 0x4e, 0x00, 0x00, 0x00, 0x07, 0x00, 0x07, 0x11, 0x11, 0x11, 0x05, 0x0b, 0x19,
    0x2b, 0x13, 0x11, 0x21, 0x15, 0x23, 0x11, 0x33, 0x15, 0x92, 0x01, 0x97, 0xe9, 0xe9, 0xfe, 0x57,
    0x07, 0x75, 0x81, 0xf9, 0x8d, 0x81, 0x00, 0x01, 0x00, 0x00, 0xff, 0xec, 0x02, 0x39, 0x05, 0xcc,
    0x00, 0x03, 0x00, 0x19, 0x40, 0x16, 0x00, 0x00, 0x00, 0x52, 0x4d, 0x02, 0x01, 0x01, 0x01, 0x51,
    0x01, 0x4e, 0x00, 0x00, 0x00, 0x03, 0x00, 0x03, 0x11, 0x03, 0x0b, 0x17, 0x2b, 0x05, 0x01, 0x33,
    0x01, 0x01, 0x97, 0xfe, 0x69, 0x9e, 0x01, 0x9b, 0x14, 0x05, 0xe0, 0xfa, 0x20, 0x00, 0x00, 0x01,
    0x00, 0x10, 0xfe, 0x57, 0x01, 0xa7, 0x05, 0xcc, 0x00, 0x07, 0x00, 0x25, 0x40, 0x22, 0x00, 0x01,
    0x01, 0x02, 0x5f, 0x00, 0x02, 0x02, 0x52, 0x4d, 0x00, 0x00, 0x00, 0x03, 0x5f, 0x04, 0x01, 0x03,
    0x03, 0x55, 0x03, 0x4e, 0x00, 0x00, 0x00, 0x07, 0x00, 0x07, 0x11, 0x11, 0x11, 0x05, 0x0b, 0x19,
    0x2b, 0x13, 0x35, 0x33, 0x11, 0x23, 0x35, 0x21, 0x11, 0x10, 0xe9, 0xe9, 0x01, 0x97, 0xfe, 0x57,
    0x81, 0x06, 0x73, 0x81, 0xf8, 0x8b, 0x00, 0x01, 0x00, 0x0a, 0x02, 0xa1, 0x03, 0xb7, 0x05, 0x81,
    0x00, 0x06, 0x00, 0x27, 0xb1, 0x06, 0x64, 0x44, 0x40, 0x1c, 0x01, 0x01, 0x00, 0x01, 0x01, 0x4c,
    0x00, 0x01, 0x00, 0x01, 0x85, 0x03, 0x02, 0x02, 0x00, 0x00, 0x76, 0x00, 0x00, 0x00, 0x06, 0x00,
    0x06, 0x11, 0x12, 0x04, 0x0b, 0x18, 0x2b, 0xb1, 0x06, 0x00, 0x44, 0x09, 0x02, 0x23, 0x01, 0x33,
    0x01, 0x03, 0x13, 0xfe, 0xcb, 0xfe, 0xce, 0xa2, 0x01, 0x70, 0xcb, 0x01, 0x72, 0x02, 0xa1, 0x02,
    0x79, 0xfd, 0x87, 0x02, 0xe0, 0xfd, 0x20, 0x00, 0x00, 0x01, 0xff, 0xe1, 0xfe, 0x69, 0x04, 0x8a,
    0xfe, 0xeb, 0x00, 0x03, 0x00, 0x26, 0xb1, 0x06, 0x64, 0x44, 0x40, 0x1b, 0x00, 0x00, 0x01, 0x01,
    0x00, 0x57, 0x00, 0x00, 0x00, 0x01, 0x5f, 0x02, 0x01, 0x01, 0x00, 0x01, 0x4f, 0x00, 0x00, 0x00,
    0x03, 0x00, 0x03, 0x11, 0x03, 0x0b, 0x17, 0x2b, 0xb1, 0x06, 0x00, 0x44, 0x03, 0x35, 0x21, 0x15,
    0x1f, 0x04, 0xa9, 0xfe, 0x69, 0x82, 0x82, 0x00, 0x00, 0x01, 0x00, 0x6a, 0x04, 0xb1, 0x02, 0x12,
    0x05, 0xe4, 0x00, 0x05, 0x00, 0x26, 0xb1, 0x06, 0x64, 0x44, 0x40, 0x1b, 0x04, 0x01, 0x02, 0x01,
    0x00, 0x01, 0x4c, 0x00, 0x00, 0x01, 0x00, 0x85, 0x02, 0x01, 0x01, 0x01, 0x76, 0x00, 0x00, 0x00,
    0x05, 0x00, 0x05, 0x12, 0x03, 0x0b, 0x17, 0x2b, 0xb1, 0x06, 0x00, 0x44, 0x01, 0x01, 0x35, 0x33,
    0x13, 0x15, 0x01, 0xb4, 0xfe, 0xb6, 0xcf, 0xd9, 0x04, 0xb1, 0x01, 0x16, 0x1d, 0xfe, 0xe1, 0x14,
    0x00, 0x02, 0x00, 0x57, 0xff, 0xec, 0x04, 0x73, 0x04, 0x4e, 0x00, 0x23, 0x00, 0x30, 0x00, 0xa1,
    0x4b, 0xb0, 0x32, 0x50, 0x58, 0x40, 0x10, 0x0f, 0x0e, 0x02, 0x01, 0x02, 0x20, 0x1a, 0x02, 0x04,
    0x07, 0x1b, 0x01, 0x00, 0x04, 0x03, 0x4c, 0x1b, 0x40, 0x10, 0x0f, 0x0e, 0x02, 0x01, 0x02, 0x20,
    0x1a, 0x02, 0x04, 0x07, 0x1b, 0x01, 0x05, 0x04, 0x03, 0x4c, 0x59, 0x4b, 0xb0, 0x32, 0x50, 0x58,
    0x40, 0x21, 0x00, 0x01, 0x00, 0x07, 0x04, 0x01, 0x07, 0x67, 0x00, 0x02, 0x02, 0x03, 0x61, 0x00,
    0x03, 0x03, 0x59, 0x4d, 0x09, 0x06, 0x02, 0x04, 0x04, 0x00, 0x61, 0x05, 0x08, 0x02, 0x00, 0x00,
    0x57, 0x00, 0x4e, 0x1b, 0x40, 0x2c, 0x00, 0x01, 0x00, 0x07, 0x04, 0x01, 0x07, 0x67, 0x00, 0x02,
    0x02, 0x03, 0x61, 0x00, 0x03, 0x03, 0x59, 0x4d, 0x09, 0x06, 0x02, 0x04, 0x04, 0x05, 0x61, 0x00,
    0x05, 0x05, 0x51, 0x4d, 0x09, 0x06, 0x02, 0x04, 0x04, 0x00, 0x61, 0x08, 0x01, 0x00, 0x00, 0x57,
    0x00, 0x4e, 0x59, 0x40, 0x1b, 0x25, 0x24, 0x01, 0x00, 0x2b, 0x29, 0x24, 0x30, 0x25, 0x30, 0x1e,
    0x1c, 0x19, 0x17, 0x12, 0x10, 0x0c, 0x0a, 0x07, 0x05, 0x00, 0x23, 0x01, 0x23, 0x0a, 0x0b, 0x16,
    0x2b, 0x05, 0x22, 0x26, 0x35, 0x34, 0x36, 0x37, 0x37, 0x35, 0x34, 0x26, 0x23, 0x22, 0x06, 0x07,
    0x27, 0x12, 0x21, 0x32, 0x16, 0x15, 0x11, 0x14, 0x16, 0x33, 0x32, 0x37, 0x15, 0x06, 0x23, 0x22,
    0x26, 0x27, 0x23, 0x06, 0x06, 0x27, 0x32, 0x36, 0x36, 0x35, 0x35, 0x07, 0x0e, 0x02, 0x15, 0x14,
    0x16, 0x01, 0x9e, 0xa3, 0xa4, 0xdd, 0xf6, 0xf3, 0x70, 0x78, 0x79, 0x6e, 0x0b, 0xbc, 0x2e, 0x01,
    0x84, 0xcc, 0xce, 0x2a, 0x3b, 0x1a, 0x21, 0x44, 0x47, 0x64, 0x5b, 0x06, 0x06, 0x45, 0xb7, 0x5a,
    0x63, 0x9a, 0x59, 0xc5, 0x7f, 0x83, 0x46, 0x5f, 0x14, 0xac, 0x96, 0xa8, 0xb4, 0x06, 0x04, 0x3b,
    0x84, 0x72, 0x52, 0x5a, 0x11, 0x01, 0x24, 0xbb, 0xb1, 0xfe, 0x2e, 0x50, 0x51, 0x07, 0x70, 0x10,
    0x69, 0x70, 0x7c, 0x67, 0x87, 0x5a, 0x9d, 0x53, 0x59, 0x04, 0x02, 0x30, 0x64, 0x51, 0x58, 0x60,
    0x00, 0x02, 0x00, 0x84, 0xff, 0xec, 0x04, 0x1d, 0x05, 0xcc, 0x00, 0x17, 0x00, 0x23, 0x00, 0x59,
    0xb6, 0x11, 0x05, 0x02, 0x05, 0x04, 0x01, 0x4c, 0x4b, 0xb0, 0x14, 0x50, 0x58, 0x40, 0x1b, 0x00,
    0x02, 0x02, 0x52, 0x4d, 0x00, 0x04, 0x04, 0x03, 0x61, 0x00, 0x03, 0x03, 0x59, 0x4d, 0x00, 0x05,
    0x05, 0x00, 0x61, 0x01, 0x01, 0x00, 0x00, 0x57, 0x00, 0x4e, 0x1b, 0x40, 0x1f, 0x00, 0x02, 0x02,
    0x52, 0x4d, 0x00, 0x04, 0x04, 0x03, 0x61, 0x00, 0x03, 0x03, 0x59, 0x4d, 0x00, 0x01, 0x01, 0x51,
    0x4d, 0x00, 0x05, 0x05, 0x00, 0x61, 0x00, 0x00, 0x00, 0x57, 0x00, 0x4e, 0x59, 0x40, 0x09, 0x24,
    0x24, 0x26, 0x13, 0x25, 0x21, 0x06, 0x0b, 0x1c, 0x2b, 0x01, 0x10, 0x21, 0x22, 0x26, 0x27, 0x23,
    0x14, 0x06, 0x07, 0x23, 0x36, 0x35, 0x11, 0x33, 0x11, 0x14, 0x07, 0x33, 0x36, 0x36, 0x33, 0x32,
    0x12, 0x03, 0x34, 0x26, 0x23, 0x22, 0x06, 0x15, 0x14, 0x16, 0x33, 0x32, 0x36, 0x04, 0x1d, 0xfe,
    0x72, 0x7b, 0xa3, 0x33, 0x02, 0x08, 0x02, 0xae, 0x06, 0xb4, 0x04, 0x04, 0x32, 0xa5, 0x7a, 0xcd,
    0xc1, 0xbd, 0x78, 0x87, 0x98, 0x8b, 0x88, 0x99, 0x88, 0x79, 0x02, 0x22, 0xfd, 0xca, 0x59, 0x63,
    0x1f, 0x7f, 0x0a, 0x36, 0xa9, 0x04, 0xed, 0xfe, 0x59, 0x41, 0x58, 0x68, 0x5a, 0xfe, 0xec, 0xfe,
    0xe2, 0xe3, 0xc4, 0xd0, 0xe2, 0xd5, 0xcb, 0xc9, 0x00, 0x01, 0x00, 0x57, 0xff, 0xec, 0x03, 0xca,
    0x04, 0x4e, 0x00, 0x19, 0x00, 0x2e, 0x40, 0x2b, 0x13, 0x01, 0x01, 0x04, 0x01, 0x4c, 0x00, 0x01,
    0x04, 0x00, 0x04, 0x01, 0x00, 0x80, 0x00, 0x04, 0x04, 0x03, 0x61, 0x00, 0x03, 0x03, 0x59, 0x4d,
    0x00, 0x00, 0x00, 0x02, 0x61, 0x00, 0x02, 0x02, 0x57, 0x02, 0x4e, 0x25, 0x24, 0x22, 0x12, 0x22,
    0x05, 0x0b, 0x1b, 0x2b, 0x01, 0x14, 0x16, 0x33, 0x32, 0x36, 0x37, 0x17, 0x06, 0x06, 0x23, 0x22,
    0x02, 0x11, 0x10, 0x12, 0x33, 0x32, 0x16, 0x17, 0x07, 0x26, 0x26, 0x23, 0x22, 0x06, 0x01, 0x13,
    0x88, 0x89, 0x60, 0x81, 0x0f, 0xb6, 0x15, 0xe0, 0xac, 0xe3, 0xef, 0xf0, 0xe0, 0xa6, 0xdb, 0x1c,
    0xb9, 0x0e, 0x72, 0x69, 0x8f, 0x80, 0x02, 0x22, 0xd8, 0xd0, 0x68, 0x6c, 0x0c, 0x9c, 0xba, 0x01,
    0x1f, 0x01, 0x13, 0x01, 0x11, 0x01, 0x1f, 0xac, 0x97, 0x0e, 0x5a, 0x6a, 0xbe, 0x00, 0x00, 0x02,
    0x00, 0x56, 0xff, 0xec, 0x03, 0xef, 0x05, 0xcc, 0x00, 0x16, 0x00, 0x22, 0x00, 0x59, 0xb6, 0x16,
    0x0b, 0x02, 0x04, 0x05, 0x01, 0x4c, 0x4b, 0xb0, 0x19, 0x50, 0x58, 0x40, 0x1b, 0x00, 0x02, 0x02,
    0x52, 0x4d, 0x00, 0x05, 0x05, 0x01, 0x61, 0x00, 0x01, 0x01, 0x59, 0x4d, 0x00, 0x04, 0x04, 0x00,
    0x61, 0x03, 0x01, 0x00, 0x00, 0x57, 0x00, 0x4e, 0x1b, 0x40, 0x1f, 0x00, 0x02, 0x02, 0x52, 0x4d,
    0x00, 0x05, 0x05, 0x01, 0x61, 0x00, 0x01, 0x01, 0x59, 0x4d, 0x00, 0x03, 0x03, 0x51, 0x4d, 0x00,
    0x04, 0x04, 0x00, 0x61, 0x00, 0x00, 0x00, 0x57, 0x00, 0x4e, 0x59, 0x40, 0x09, 0x24, 0x26, 0x13,
    0x15, 0x23, 0x22, 0x06, 0x0b, 0x1c, 0x2b, 0x25, 0x06, 0x06, 0x23, 0x22, 0x02, 0x11, 0x10, 0x21,
    0x32, 0x16, 0x17, 0x33, 0x27, 0x11, 0x33, 0x11, 0x14, 0x17, 0x23, 0x26, 0x26, 0x35, 0x01, 0x14,
    0x16, 0x33, 0x32, 0x36, 0x35, 0x34, 0x26, 0x23, 0x22, 0x06, 0x03, 0x35, 0x32, 0xa5, 0x7a, 0xcd,
    0xc1, 0x01, 0x8e, 0x7b, 0xa4, 0x32, 0x02, 0x02, 0xb4, 0x06, 0xac, 0x03, 0x07, 0xfd, 0xda, 0x78,
    0x87, 0x99, 0x8a, 0x8a, 0x97, 0x88, 0x79, 0xae, 0x68, 0x5a, 0x01, 0x14, 0x01, 0x18, 0x02, 0x36,
    0x5a, 0x62, 0x79, 0x01, 0xc1, 0xfb, 0x13, 0xa9, 0x36, 0x10, 0x74, 0x2a, 0x01, 0x70, 0xe3, 0xc4,
    0xd4, 0xdf, 0xd7, 0xc8, 0xc9, 0x00, 0x00, 0x02, 0x00, 0x57, 0xff, 0xec, 0x04, 0x18, 0x04, 0x4e,
    0x00, 0x12, 0x00, 0x19, 0x00, 0x3d, 0x40, 0x3a, 0x07, 0x06, 0x02, 0x00, 0x03, 0x01, 0x4c, 0x07,
    0x01, 0x05, 0x06, 0x01, 0x03, 0x00, 0x05, 0x03, 0x67, 0x00, 0x04, 0x04, 0x02, 0x61, 0x00, 0x02,
    0x02, 0x59, 0x4d, 0x00, 0x00, 0x00, 0x01, 0x61, 0x00, 0x01, 0x01, 0x57, 0x01, 0x4e, 0x13, 0x13,
    0x00, 0x00, 0x13, 0x19, 0x13, 0x19, 0x17, 0x15, 0x00, 0x12, 0x00, 0x12, 0x24, 0x24, 0x22, 0x08,
    0x0b, 0x19, 0x2b, 0x01, 0x14, 0x16, 0x33, 0x32, 0x36, 0x37, 0x17, 0x02, 0x21, 0x22, 0x02, 0x11,
    0x10, 0x12, 0x33, 0x20, 0x11, 0x15, 0x27, 0x26, 0x26, 0x23, 0x22, 0x06, 0x07, 0x01, 0x14, 0x9a,
    0x94, 0x75, 0x8d, 0x19, 0x9e, 0x61, 0xfe, 0xa8, 0xf0, 0xfb, 0xfb, 0xe9, 0x01, 0xdd, 0xba, 0x0f,
    0x90, 0x87, 0x83, 0x99, 0x06, 0x01, 0xf7, 0xba, 0xca, 0x5e, 0x48, 0x2d, 0xff, 0x00, 0x01, 0x1e,
    0x01, 0x1a, 0x01, 0x0c, 0x01, 0x1e, 0xfd, 0xc1, 0x18, 0x8a, 0xab, 0x9d, 0xaf, 0x99, 0x00, 0x01,
    0x00, 0x1d, 0x00, 0x00, 0x02, 0x3c, 0x05, 0xca, 0x00, 0x15, 0x00, 0x39, 0x40, 0x36, 0x0c, 0x01,
    0x04, 0x03, 0x0d, 0x01, 0x02, 0x04, 0x02, 0x4c, 0x00, 0x04, 0x04, 0x03, 0x61, 0x00, 0x03, 0x03,
    0x52, 0x4d, 0x07, 0x06, 0x02, 0x01, 0x01, 0x02, 0x5f, 0x05, 0x01, 0x02, 0x02, 0x53, 0x4d, 0x00,
    0x00, 0x00, 0x51, 0x00, 0x4e, 0x00, 0x00, 0x00, 0x15, 0x00, 0x15, 0x13, 0x23, 0x23, 0x11, 0x11,
    0x11, 0x08, 0x0b, 0x1c, 0x2b, 0x01, 0x11, 0x23, 0x11, 0x23, 0x35, 0x33, 0x35, 0x34, 0x36, 0x33,
    0x32, 0x17, 0x15, 0x26, 0x23, 0x22, 0x06, 0x15, 0x15, 0x33, 0x15, 0x01, 0x69, 0xb4, 0x98, 0x98,
    0x82, 0x86, 0x4b, 0x34, 0x2d, 0x23, 0x45, 0x3e, 0xd3, 0x03, 0xb7, 0xfc, 0x49, 0x03, 0xb7, 0x83,
    0x7a, 0x94, 0x82, 0x0c, 0x89, 0x08, 0x46, 0x5c, 0x61, 0x83, 0x00, 0x02, 0x00, 0x56, 0xfe, 0x57,
    0x03, 0xef, 0x04, 0x4b, 0x00, 0x20, 0x00, 0x2e, 0x00, 0x77, 0x40, 0x0c, 0x17, 0x0a, 0x02, 0x06,
    0x05, 0x04, 0x03, 0x02, 0x01, 0x02, 0x02, 0x4c, 0x4b, 0xb0, 0x17, 0x50, 0x58, 0x40, 0x21, 0x00,
    0x05, 0x05, 0x03, 0x61, 0x04, 0x01, 0x03, 0x03, 0x59, 0x4d, 0x00, 0x06, 0x06, 0x02, 0x61, 0x00,
    0x02, 0x02, 0x51, 0x4d, 0x00, 0x01, 0x01, 0x00, 0x61, 0x07, 0x01, 0x00, 0x00, 0x55, 0x00, 0x4e,
    0x1b, 0x40, 0x25, 0x00, 0x04, 0x04, 0x53, 0x4d, 0x00, 0x05, 0x05, 0x03, 0x61, 0x00, 0x03, 0x03,
    0x59, 0x4d, 0x00, 0x06, 0x06, 0x02, 0x61, 0x00, 0x02, 0x02, 0x51, 0x4d, 0x00, 0x01, 0x01, 0x00,
    0x61, 0x07, 0x01, 0x00, 0x00, 0x55, 0x00, 0x4e, 0x59, 0x40, 0x15, 0x01, 0x00, 0x2c, 0x2a, 0x26,
    0x24, 0x1c, 0x1a, 0x15, 0x13, 0x0f, 0x0d, 0x08, 0x06, 0x00, 0x20, 0x01, 0x20, 0x08, 0x0b, 0x16,
    0x2b, 0x01, 0x22, 0x26, 0x27, 0x37, 0x16, 0x16, 0x33, 0x20, 0x11, 0x35, 0x23, 0x06, 0x06, 0x23,
    0x22, 0x02, 0x11, 0x10, 0x12, 0x33, 0x32, 0x16, 0x17, 0x33, 0x34, 0x36, 0x37, 0x33, 0x06, 0x15,
    0x11, 0x10, 0x03, 0x34, 0x26, 0x26, 0x23, 0x22, 0x06, 0x15, 0x14, 0x16, 0x33, 0x32, 0x36, 0x36,
    0x02, 0x24, 0xb1, 0xd2, 0x1e, 0xb5, 0x12, 0x7b, 0x64, 0x01, 0x0d, 0x02, 0x33, 0xb2, 0x77, 0xc7,
    0xbb, 0xc9, 0xcd, 0x73, 0xa9, 0x2e, 0x02, 0x08, 0x04, 0xab, 0x06, 0xb3, 0x48, 0x83, 0x53, 0x8a,
    0x7e, 0x76, 0x8f, 0x55, 0x84, 0x48, 0xfe, 0x57, 0x8b, 0x80, 0x1a, 0x4b, 0x51, 0x01, 0x3b, 0xae,
    0x68, 0x69, 0x01, 0x08, 0x01, 0x1b, 0x01, 0x1f, 0x01, 0x11, 0x69, 0x61, 0x1e, 0x94, 0x07, 0x36,
    0xaa, 0xfc, 0xc5, 0xfe, 0x38, 0x03, 0xc6, 0x84, 0xbf, 0x65, 0xc8, 0xe0, 0xde, 0xc2, 0x64, 0xbb,
    0x00, 0x01, 0x00, 0x8e, 0x00, 0x00, 0x03, 0xee, 0x05, 0xcc, 0x00, 0x18, 0x00, 0x21, 0x40, 0x1e,
    0x00, 0x04, 0x04, 0x52, 0x4d, 0x00, 0x02, 0x02, 0x00, 0x61, 0x00, 0x00, 0x00, 0x59, 0x4d, 0x03,
    0x01, 0x01, 0x01, 0x51, 0x01, 0x4e, 0x11, 0x13, 0x24, 0x13, 0x22, 0x05, 0x0b, 0x1b, 0x2b, 0x01,
    0x36, 0x36, 0x33, 0x32, 0x16, 0x15, 0x11, 0x23, 0x11, 0x34, 0x26, 0x26, 0x23, 0x22, 0x06, 0x15,
    0x11, 0x23, 0x11, 0x33, 0x11, 0x14, 0x06, 0x07, 0x01, 0x3d, 0x3a, 0xa3, 0x7d, 0xb0, 0xa7, 0xb5,
    0x2a, 0x60, 0x55, 0x7f, 0x99, 0xb4, 0xb4, 0x07, 0x01, 0x03, 0x81, 0x6a, 0x63, 0xaf, 0xce, 0xfd,
    0x2f, 0x02, 0xae, 0x72, 0x6f, 0x34, 0xb0, 0x95, 0xfd, 0x82, 0x05, 0xcc, 0xfe, 0x7e, 0x3d, 0x82,
    0x0a, 0x00, 0x00, 0x02, 0x00, 0x89, 0x00, 0x00, 0x01, 0x3d, 0x05, 0xcc, 0x00, 0x03, 0x00, 0x07,
    0x00, 0x2c, 0x40, 0x29, 0x05, 0x01, 0x03, 0x03, 0x02, 0x5f, 0x00, 0x02, 0x02, 0x52, 0x4d, 0x00,
    0x00, 0x00, 0x53, 0x4d, 0x04, 0x01, 0x01, 0x01, 0x51, 0x01, 0x4e, 0x04, 0x04, 0x00, 0x00, 0x04,
    0x07, 0x04, 0x07, 0x06, 0x05, 0x00, 0x03, 0x00, 0x03, 0x11, 0x06, 0x0b, 0x17, 0x2b, 0x33, 0x11,
    0x33, 0x11, 0x03, 0x35, 0x33, 0x15, 0x89, 0xb4, 0xb4, 0xb4, 0x04, 0x3a, 0xfb, 0xc6, 0x05, 0x20,
    0xac, 0xac, 0x00, 0x02, 0xff, 0xce, 0xfe, 0x57, 0x01, 0x3d, 0x05, 0xcc, 0x00, 0x0c, 0x00, 0x10,
    0x00, 0x35, 0x40, 0x32, 0x06, 0x01, 0x01, 0x02, 0x05, 0x01, 0x00, 0x01, 0x02, 0x4c, 0x05, 0x01,
    0x04, 0x04, 0x03, 0x5f, 0x00, 0x03, 0x03, 0x52, 0x4d, 0x00, 0x02, 0x02, 0x53, 0x4d, 0x00, 0x01,
    0x01, 0x00, 0x61, 0x00, 0x00, 0x00, 0x55, 0x00, 0x4e, 0x0d, 0x0d, 0x0d, 0x10, 0x0d, 0x10, 0x12,
    0x13, 0x13, 0x22, 0x06, 0x0b, 0x1a, 0x2b, 0x05, 0x14, 0x06, 0x23, 0x22, 0x27, 0x35, 0x17, 0x32,
    0x36, 0x35, 0x11, 0x33, 0x27, 0x35, 0x33, 0x15, 0x01, 0x3d, 0x78, 0x78, 0x4d, 0x32, 0x3e, 0x45,
    0x38, 0xb4, 0xb4, 0xb4, 0x86, 0x99, 0x8a, 0x09, 0x8b, 0x06, 0x48, 0x68, 0x04, 0xa5, 0xe6, 0xac,
    0xac, 0x00, 0x00, 0x01, 0x00, 0x8a, 0x00, 0x00, 0x04, 0x03, 0x05, 0xcc, 0x00, 0x0b, 0x00, 0x2a,
    0x40, 0x27, 0x0a, 0x07, 0x02, 0x01, 0x04, 0x00, 0x02, 0x01, 0x4c, 0x00, 0x01, 0x01, 0x52, 0x4d,
    0x00, 0x02, 0x02, 0x53, 0x4d, 0x04, 0x03, 0x02, 0x00, 0x00, 0x51, 0x00, 0x4e, 0x00, 0x00, 0x00,
    0x0b, 0x00, 0x0b, 0x12, 0x11, 0x13, 0x05, 0x0b, 0x19, 0x2b, 0x21, 0x01, 0x07, 0x11, 0x23, 0x11,
    0x33, 0x11, 0x01, 0x33, 0x01, 0x01, 0x03, 0x30, 0xfe, 0x92, 0x84, 0xb4, 0xb4, 0x01, 0xdb, 0xd3,
    0xfe, 0x49, 0x01, 0xce, 0x01, 0xee, 0x6d, 0xfe, 0x7f, 0x05, 0xcc, 0xfc, 0x61, 0x02, 0x0d, 0xfe,
    0x2f, 0xfd, 0x97, 0x00, 0x00, 0x01, 0x00, 0x8a, 0x00, 0x00, 0x01, 0x3e, 0x05, 0xcc, 0x00, 0x03,
    0x00, 0x19, 0x40, 0x16, 0x00, 0x00, 0x00, 0x52, 0x4d, 0x02, 0x01, 0x01, 0x01, 0x51, 0x01, 0x4e,
    0x00, 0x00, 0x00, 0x03, 0x00, 0x03, 0x11, 0x03, 0x0b, 0x17, 0x2b, 0x33, 0x11, 0x33, 0x11, 0x8a,
    0xb4, 0x05, 0xcc, 0xfa, 0x34, 0x00, 0x00, 0x01, 0x00, 0x88, 0x00, 0x00, 0x06, 0x23, 0x04, 0x4e,
    0x00, 0x29, 0x00, 0x56, 0xb6, 0x18, 0x11, 0x02, 0x01, 0x00, 0x01, 0x4c, 0x4b, 0xb0, 0x19, 0x50,
    0x58, 0x40, 0x16, 0x06, 0x01, 0x00, 0x00, 0x02, 0x61, 0x04, 0x03, 0x02, 0x02, 0x02, 0x53, 0x4d,
    0x08, 0x07, 0x05, 0x03, 0x01, 0x01, 0x51, 0x01, 0x4e, 0x1b, 0x40, 0x1a, 0x00, 0x02, 0x02, 0x53,
    0x4d, 0x06, 0x01, 0x00, 0x00, 0x03, 0x61, 0x04, 0x01, 0x03, 0x03, 0x59, 0x4d, 0x08, 0x07, 0x05,
    0x03, 0x01, 0x01, 0x51, 0x01, 0x4e, 0x59, 0x40, 0x10, 0x00, 0x00, 0x00, 0x29, 0x00, 0x29, 0x23,
    0x13, 0x25, 0x27, 0x13, 0x13, 0x23, 0x09, 0x0b, 0x1d, 0x2b, 0x21, 0x11, 0x34, 0x26, 0x23, 0x22,
    0x06, 0x15, 0x11, 0x23, 0x11, 0x34, 0x27, 0x33, 0x1e, 0x02, 0x17, 0x33, 0x36, 0x36, 0x33, 0x32,
    0x16, 0x17, 0x33, 0x36, 0x36, 0x33, 0x32, 0x16, 0x15, 0x11, 0x23, 0x11, 0x34, 0x26, 0x23, 0x22,
    0x06, 0x15, 0x11, 0x03, 0x00, 0x56, 0x70, 0x73, 0x86, 0xb3, 0x06, 0xaa, 0x01, 0x02, 0x03, 0x02,
    0x03, 0x3a, 0x96, 0x6c, 0x7b, 0x8f, 0x1c, 0x03, 0x38, 0x9f, 0x71, 0xa4, 0x95, 0xb2, 0x56, 0x70,
    0x76, 0x83, 0x02, 0xae, 0x9d, 0x78, 0xb0, 0xa0, 0xfd, 0x8d, 0x03, 0x53, 0xbd, 0x2a, 0x05, 0x2c,
    0x39, 0x4f, 0x73, 0x5a, 0x62, 0x6b, 0x6d, 0x60, 0xb2, 0xcb, 0xfd, 0x2f, 0x02, 0xae, 0x9d, 0x78,
    0xaf, 0xa1, 0xfd, 0x8d, 0x00, 0x01, 0x00, 0x88, 0x00, 0x00, 0x03, 0xee, 0x04, 0x4e, 0x00, 0x1a,
    0x00, 0x4c, 0xb5, 0x12, 0x01, 0x01, 0x00, 0x01, 0x4c, 0x4b, 0xb0, 0x19, 0x50, 0x58, 0x40, 0x13,
    0x00, 0x00, 0x00, 0x02, 0x61, 0x03, 0x01, 0x02, 0x02, 0x53, 0x4d, 0x05, 0x04, 0x02, 0x01, 0x01,
    0x51, 0x01, 0x4e, 0x1b, 0x40, 0x17, 0x00, 0x02, 0x02, 0x53, 0x4d, 0x00, 0x00, 0x00, 0x03, 0x61,
    0x00, 0x03, 0x03, 0x59, 0x4d, 0x05, 0x04, 0x02, 0x01, 0x01, 0x51, 0x01, 0x4e, 0x59, 0x40, 0x0d,
    0x00, 0x00, 0x00, 0x1a, 0x00, 0x1a, 0x27, 0x13, 0x13, 0x24, 0x06, 0x0b, 0x1a, 0x2b, 0x21, 0x11,
    0x34, 0x26, 0x26, 0x23, 0x22, 0x06, 0x15, 0x11, 0x23, 0x11, 0x34, 0x27, 0x33, 0x1e, 0x02, 0x17,
    0x33, 0x36, 0x36, 0x33, 0x32, 0x16, 0x15, 0x11, 0x03, 0x39, 0x2a, 0x5c, 0x59, 0x82, 0x96, 0xb4,
    0x06, 0xaa, 0x01, 0x02, 0x03, 0x02, 0x03, 0x3e, 0xa3, 0x79, 0xb2, 0xa5, 0x02, 0xae, 0x6b, 0x76,
    0x34, 0xb2, 0x9e, 0xfd, 0x8d, 0x03, 0x53, 0xbd, 0x2a, 0x05, 0x2c, 0x39, 0x4f, 0x70, 0x5d, 0xb1,
    0xcc, 0xfd, 0x2f, 0x00, 0x00, 0x02, 0x00, 0x56, 0xff, 0xec, 0x04, 0x1d, 0x04, 0x4e, 0x00, 0x0a,
    0x00, 0x16, 0x00, 0x1f, 0x40, 0x1c, 0x00, 0x02, 0x02, 0x01, 0x61, 0x00, 0x01, 0x01, 0x59, 0x4d,
    0x00, 0x03, 0x03, 0x00, 0x61, 0x00, 0x00, 0x00, 0x57, 0x00, 0x4e, 0x24, 0x24, 0x23, 0x22, 0x04,
    0x0b, 0x1a, 0x2b, 0x01, 0x10, 0x02, 0x23, 0x22, 0x02, 0x11, 0x10, 0x21, 0x32, 0x12, 0x03, 0x34,
    0x26, 0x23, 0x22, 0x06, 0x15, 0x14, 0x16, 0x33, 0x32, 0x36, 0x04, 0x1d, 0xfa, 0xee, 0xed, 0xf2,
    0x01, 0xe5, 0xf8, 0xea, 0xbd, 0x85, 0x9d, 0x9e, 0x8d, 0x8b, 0x95, 0xa2, 0x8b, 0x02, 0x1e, 0xfe,
    0xe4, 0xfe, 0xea, 0x01, 0x21, 0x01, 0x11, 0x02, 0x30, 0xfe, 0xef, 0xfe, 0xe1, 0xe0, 0xcb, 0xcf,
    0xdc, 0xd6, 0xd7, 0xd0, 0x00, 0x02, 0x00, 0x84, 0xfe, 0x57, 0x04, 0x1d, 0x04, 0x4d, 0x00, 0x17,
    0x00, 0x24, 0x00, 0x59, 0xb6, 0x12, 0x04, 0x02, 0x05, 0x04, 0x01, 0x4c, 0x4b, 0xb0, 0x1b, 0x50,
    0x58, 0x40, 0x1b, 0x00, 0x04, 0x04, 0x02, 0x61, 0x03, 0x01, 0x02, 0x02, 0x53, 0x4d, 0x00, 0x05,
    0x05, 0x00, 0x61, 0x00, 0x00, 0x00, 0x57, 0x4d, 0x00, 0x01, 0x01, 0x55, 0x01, 0x4e, 0x1b, 0x40,
    0x1f, 0x00, 0x02, 0x02, 0x53, 0x4d, 0x00, 0x04, 0x04, 0x03, 0x61, 0x00, 0x03, 0x03, 0x59, 0x4d,
    0x00, 0x05, 0x05, 0x00, 0x61, 0x00, 0x00, 0x00, 0x57, 0x4d, 0x00, 0x01, 0x01, 0x55, 0x01, 0x4e,
    0x59, 0x40, 0x09, 0x25, 0x24, 0x27, 0x13, 0x15, 0x21, 0x06, 0x0b, 0x1c, 0x2b, 0x01, 0x10, 0x21,
    0x22, 0x27, 0x23, 0x16, 0x15, 0x11, 0x23, 0x11, 0x34, 0x27, 0x33, 0x1e, 0x02, 0x15, 0x33, 0x36,
    0x36, 0x33, 0x32, 0x12, 0x03, 0x34, 0x26, 0x23, 0x22, 0x06, 0x06, 0x15, 0x14, 0x16, 0x33, 0x32,
    0x36, 0x04, 0x1d, 0xfe, 0x72, 0xfa, 0x56, 0x05, 0x04, 0xb4, 0x06, 0xae, 0x01, 0x04, 0x05, 0x04,
    0x30, 0x9e, 0x81, 0xc8, 0xc6, 0xbd, 0x7a, 0x85, 0x6b, 0x79, 0x3f, 0x88, 0x99, 0x86, 0x7b, 0x02,
    0x22, 0xfd, 0xca, 0xbc, 0x08, 0xa2, 0xfe, 0x59, 0x05, 0x06, 0xa7, 0x36, 0x04, 0x31, 0x66, 0x13,
    0x64, 0x5d, 0xfe, 0xf4, 0xfe, 0xdd, 0xe2, 0xc2, 0x5a, 0xbf, 0x99, 0xd5, 0xca, 0xc5, 0x00, 0x02,
    0x00, 0x56, 0xfe, 0x57, 0x03, 0xf0, 0x04, 0x4e, 0x00, 0x16, 0x00, 0x22, 0x00, 0x39, 0x40, 0x36,
    0x13, 0x08, 0x02, 0x05, 0x04, 0x01, 0x4c, 0x00, 0x04, 0x04, 0x01, 0x61, 0x02, 0x01, 0x01, 0x01,
    0x59, 0x4d, 0x00, 0x05, 0x05, 0x00, 0x61, 0x06, 0x01, 0x00, 0x00, 0x57, 0x4d, 0x00, 0x03, 0x03,
    0x55, 0x03, 0x4e, 0x01, 0x00, 0x21, 0x1f, 0x1b, 0x19, 0x11, 0x10, 0x0d, 0x0b, 0x06, 0x04, 0x00,
    0x16, 0x01, 0x16, 0x07, 0x0b, 0x16, 0x2b, 0x05, 0x22, 0x02, 0x11, 0x10, 0x21, 0x32, 0x16, 0x17,
    0x33, 0x34, 0x36, 0x37, 0x33, 0x06, 0x15, 0x11, 0x23, 0x11, 0x37, 0x23, 0x06, 0x06, 0x13, 0x34,
    0x26, 0x23, 0x22, 0x06, 0x15, 0x14, 0x16, 0x33, 0x32, 0x36, 0x01, 0xe4, 0xce, 0xc0, 0x01, 0x8e,
    0x7b, 0xa0, 0x36, 0x02, 0x08, 0x04, 0xad, 0x07, 0xb4, 0x04, 0x02, 0x36, 0x9e, 0xd2, 0x8a, 0x97,
    0x89, 0x78, 0x79, 0x86, 0x99, 0x8a, 0x14, 0x01, 0x16, 0x01, 0x16, 0x02, 0x36, 0x57, 0x65, 0x1e,
    0x93, 0x05, 0x3b, 0xec, 0xfb, 0x36, 0x01, 0xb7, 0xa4, 0x6b, 0x5b, 0x02, 0x3e, 0xd3, 0xcc, 0xcc,
    0xdf, 0xe3, 0xc4, 0xda, 0x00, 0x01, 0x00, 0x88, 0x00, 0x00, 0x02, 0x88, 0x04, 0x4e, 0x00, 0x13,
    0x00, 0x63, 0x4b, 0xb0, 0x19, 0x50, 0x58, 0x40, 0x0b, 0x0d, 0x06, 0x02, 0x03, 0x02, 0x01, 0x4c,
    0x0c, 0x01, 0x00, 0x4a, 0x1b, 0x40, 0x0b, 0x0c, 0x01, 0x00, 0x01, 0x0d, 0x06, 0x02, 0x03, 0x02,
    0x02, 0x4c, 0x59, 0x4b, 0xb0, 0x19, 0x50, 0x58, 0x40, 0x12, 0x00, 0x02, 0x02, 0x00, 0x61, 0x01,
    0x01, 0x00, 0x00, 0x53, 0x4d, 0x04, 0x01, 0x03, 0x03, 0x51, 0x03, 0x4e, 0x1b, 0x40, 0x16, 0x00,
    0x00, 0x00, 0x53, 0x4d, 0x00, 0x02, 0x02, 0x01, 0x61, 0x00, 0x01, 0x01, 0x59, 0x4d, 0x04, 0x01,
    0x03, 0x03, 0x51, 0x03, 0x4e, 0x59, 0x40, 0x0c, 0x00, 0x00, 0x00, 0x13, 0x00, 0x13, 0x23, 0x25,
    0x13, 0x05, 0x0b, 0x19, 0x2b, 0x33, 0x11, 0x34, 0x27, 0x33, 0x16, 0x15, 0x33, 0x36, 0x36, 0x33,
    0x32, 0x17, 0x15, 0x26, 0x23, 0x22, 0x06, 0x15, 0x11, 0x8e, 0x06, 0xaa, 0x08, 0x04, 0x2b, 0x70,
    0x66, 0x24, 0x25, 0x24, 0x3c, 0x70, 0x76, 0x03, 0x3e, 0x72, 0x8a, 0xb8, 0x25, 0x8b, 0x66, 0x0a,
    0xa5, 0x0a, 0xc1, 0xb4, 0xfd, 0xcc, 0x00, 0x01, 0x00, 0x39, 0xff, 0xec, 0x03, 0xb6, 0x04, 0x4b,
    0x00, 0x2a, 0x00, 0x28, 0x40, 0x25, 0x1c, 0x1b, 0x07, 0x06, 0x04, 0x01, 0x03, 0x01, 0x4c, 0x00,
    0x03, 0x03, 0x02, 0x61, 0x00, 0x02, 0x02, 0x59, 0x4d, 0x00, 0x01, 0x01, 0x00, 0x61, 0x00, 0x00,
    0x00, 0x57, 0x00, 0x4e, 0x25, 0x2c, 0x25, 0x22, 0x04, 0x0b, 0x1a, 0x2b, 0x01, 0x14, 0x06, 0x23,
    0x22, 0x26, 0x27, 0x37, 0x16, 0x16, 0x33, 0x32, 0x36, 0x35, 0x34, 0x26, 0x27, 0x27, 0x2e, 0x02,
    0x35, 0x34, 0x36, 0x33, 0x32, 0x16, 0x17, 0x07, 0x26, 0x26, 0x23, 0x22, 0x06, 0x15, 0x14, 0x16,
    0x16, 0x17, 0x1e, 0x03, 0x03, 0xb6, 0xe7, 0xd0, 0xca, 0xdb, 0x21, 0x9f, 0x17, 0x90, 0x80, 0x89,
    0x7f, 0x58, 0x62, 0x81, 0x9b, 0x83, 0x4a, 0xd3, 0xca, 0xb3, 0xd3, 0x1c, 0xa2, 0x0f, 0x83, 0x6e,
    0x7a, 0x74, 0x30, 0x5e, 0x97, 0x8f, 0x7e, 0x49, 0x28, 0x01, 0x2b, 0x99, 0xa6, 0x85, 0x8d, 0x1f,
    0x57, 0x51, 0x54, 0x54, 0x40, 0x50, 0x1a, 0x22, 0x28, 0x4d, 0x6e, 0x50, 0x94, 0x9b, 0x7e, 0x8b,
    0x14, 0x48, 0x4d, 0x4a, 0x4b, 0x2e, 0x3c, 0x2a, 0x25, 0x24, 0x3d, 0x4a, 0x61, 0x00, 0x00, 0x01,
    0x00, 0x1f, 0xff, 0xf0, 0x02, 0x2a, 0x05, 0x2c, 0x00, 0x14, 0x00, 0x33, 0x40, 0x30, 0x14, 0x01,
    0x06, 0x01, 0x00, 0x01, 0x00, 0x06, 0x02, 0x4c, 0x00, 0x03, 0x02, 0x03, 0x85, 0x05, 0x01, 0x01,
    0x01, 0x02, 0x5f, 0x04, 0x01, 0x02, 0x02, 0x53, 0x4d, 0x00, 0x06, 0x06, 0x00, 0x62, 0x00, 0x00,
    0x00, 0x57, 0x00, 0x4e, 0x23, 0x11, 0x11, 0x11, 0x11, 0x12, 0x21, 0x07, 0x0b, 0x1d, 0x2b, 0x25,
    0x06, 0x23, 0x22, 0x35, 0x11, 0x23, 0x35, 0x33, 0x37, 0x33, 0x15, 0x33, 0x15, 0x23, 0x11, 0x14,
    0x16, 0x33, 0x32, 0x37, 0x02, 0x2a, 0x59, 0x5d, 0xd8, 0x7d, 0x84, 0x35, 0x78, 0xc8, 0xc8, 0x33,
    0x3f, 0x24, 0x44, 0x08, 0x18, 0xf5, 0x02, 0xd2, 0x83, 0xf2, 0xf2, 0x83, 0xfd, 0x55, 0x4e, 0x3f,
    0x0e, 0x00, 0x00, 0x01, 0x00, 0x85, 0xff, 0xec, 0x03, 0xeb, 0x04, 0x3a, 0x00, 0x1a, 0x00, 0x4c,
    0xb5, 0x12, 0x01, 0x00, 0x01, 0x01, 0x4c, 0x4b, 0xb0, 0x19, 0x50, 0x58, 0x40, 0x13, 0x05, 0x04,
    0x02, 0x01, 0x01, 0x53, 0x4d, 0x00, 0x00, 0x00, 0x02, 0x62, 0x03, 0x01, 0x02, 0x02, 0x51, 0x02,
    0x4e, 0x1b, 0x40, 0x17, 0x05, 0x04, 0x02, 0x01, 0x01, 0x53, 0x4d, 0x00, 0x02, 0x02, 0x51, 0x4d,
    0x00, 0x00, 0x00, 0x03, 0x62, 0x00, 0x03, 0x03, 0x57, 0x03, 0x4e, 0x59, 0x40, 0x0d, 0x00, 0x00,
    0x00, 0x1a, 0x00, 0x1a, 0x27, 0x13, 0x13, 0x24, 0x06, 0x0b, 0x1a, 0x2b, 0x01, 0x11, 0x14, 0x16,
    0x16, 0x33, 0x32, 0x36, 0x35, 0x11, 0x33, 0x11, 0x14, 0x17, 0x23, 0x2e, 0x02, 0x27, 0x23, 0x06,
    0x06, 0x23, 0x22, 0x26, 0x35, 0x11, 0x01, 0x3a, 0x2a, 0x5c, 0x59, 0x82, 0x96, 0xb4, 0x06, 0xaa,
    0x01, 0x02, 0x03, 0x02, 0x03, 0x3e, 0xa3, 0x79, 0xb2, 0xa5, 0x04, 0x3a, 0xfd, 0x52, 0x6b, 0x76,
    0x34, 0xb2, 0x9e, 0x02, 0x73, 0xfc, 0xad, 0xbd, 0x2a, 0x05, 0x2c, 0x39, 0x4f, 0x70, 0x5d, 0xb1,
    0xcc, 0x02, 0xd1, 0x00, 0x00, 0x01, 0x00, 0x07, 0x00, 0x00, 0x03, 0xf9, 0x04, 0x3a, 0x00, 0x0a,
    0x00, 0x1b, 0x40, 0x18, 0x06, 0x01, 0x00, 0x01, 0x01, 0x4c, 0x02, 0x01, 0x01, 0x01, 0x53, 0x4d,
    0x00, 0x00, 0x00, 0x51, 0x00, 0x4e, 0x16, 0x11, 0x10, 0x03, 0x0b, 0x19, 0x2b, 0x21, 0x23, 0x01,
    0x33, 0x13, 0x16, 0x17, 0x37, 0x37, 0x13, 0x33, 0x02, 0x65, 0xd5, 0xfe, 0x77, 0xc0, 0xee, 0x0d,
    0x38, 0x23, 0x27, 0xf6, 0xbf, 0x04, 0x3a, 0xfd, 0x40, 0x28, 0xc5, 0x75, 0x76, 0x02, 0xc2, 0x00,
    0x00, 0x01, 0xff, 0xfd, 0x00, 0x00, 0x05, 0xcc, 0x04, 0x3a, 0x00, 0x14, 0x00, 0x21, 0x40, 0x1e,
    0x11, 0x0c, 0x03, 0x03, 0x00, 0x02, 0x01, 0x4c, 0x04, 0x03, 0x02, 0x02, 0x02, 0x53, 0x4d, 0x01,
    0x01, 0x00, 0x00, 0x51, 0x00, 0x4e, 0x14, 0x15, 0x11, 0x15, 0x10, 0x05, 0x0b, 0x1b, 0x2b, 0x21,
    0x23, 0x03, 0x27, 0x06, 0x06, 0x03, 0x23, 0x01, 0x33, 0x13, 0x16, 0x17, 0x37, 0x13, 0x33, 0x13,
    0x17, 0x37, 0x13, 0x33, 0x04, 0x96, 0xd1, 0xbd, 0x24, 0x09, 0x26, 0xb9, 0xd0, 0xfe, 0xd1, 0xb2,
    0xb7, 0x07, 0x24, 0x11, 0xe2, 0xc1, 0xbd, 0x2e, 0x1f, 0xcd, 0xb0, 0x02, 0xfd, 0xa9, 0x2d, 0xa9,
    0xfd, 0x30, 0x04, 0x3a, 0xfd, 0x21, 0x18, 0xae, 0x4a, 0x03, 0x5b, 0xfd, 0x19, 0xbe, 0x8b, 0x03,
    0x1a, 0x00, 0x00, 0x01, 0x00, 0x17, 0x00, 0x00, 0x03, 0xea, 0x04, 0x3a, 0x00, 0x0b, 0x00, 0x26,
    0x40, 0x23, 0x0a, 0x07, 0x04, 0x01, 0x04, 0x00, 0x01, 0x01, 0x4c, 0x02, 0x01, 0x01, 0x01, 0x53,
    0x4d, 0x04, 0x03, 0x02, 0x00, 0x00, 0x51, 0x00, 0x4e, 0x00, 0x00, 0x00, 0x0b, 0x00, 0x0b, 0x12,
    0x12, 0x12, 0x05, 0x0b, 0x19, 0x2b, 0x21, 0x01, 0x01, 0x23, 0x01, 0x01, 0x33, 0x01, 0x01, 0x33,
    0x01, 0x01, 0x03, 0x21, 0xfe, 0xdd, 0xfe, 0xdb, 0xc2, 0x01, 0x81, 0xfe, 0x91, 0xc7, 0x01, 0x0e,
    0x01, 0x0c, 0xc9, 0xfe, 0x91, 0x01, 0x86, 0x01, 0xbc, 0xfe, 0x44, 0x02, 0x2c, 0x02, 0x0e, 0xfe,
    0x5b, 0x01, 0xa5, 0xfd, 0xf4, 0xfd, 0xd2, 0x00, 0x00, 0x01, 0x00, 0x05, 0xfe, 0x57, 0x03, 0xfc,
    0x04, 0x3a, 0x00, 0x16, 0x00, 0x2f, 0x40, 0x2c, 0x08, 0x03, 0x02, 0x01, 0x02, 0x02, 0x01, 0x00,
    0x01, 0x02, 0x4c, 0x03, 0x01, 0x02, 0x02, 0x53, 0x4d, 0x00, 0x01, 0x01, 0x00, 0x61, 0x04, 0x01,
    0x00, 0x00, 0x55, 0x00, 0x4e, 0x01, 0x00, 0x12, 0x11, 0x0a, 0x09, 0x06, 0x04, 0x00, 0x16, 0x01,
    0x16, 0x05, 0x0b, 0x16, 0x2b, 0x13, 0x22, 0x27, 0x35, 0x16, 0x33, 0x32, 0x37, 0x37, 0x01, 0x33,
    0x13, 0x1e, 0x02, 0x17, 0x37, 0x13, 0x33, 0x01, 0x0e, 0x02, 0xbf, 0x4a, 0x32, 0x26, 0x2e, 0xa8,
    0x62, 0x11, 0xfe, 0x53, 0xc0, 0xe4, 0x05, 0x0e, 0x4c, 0x03, 0x46, 0xed, 0xbe, 0xfe, 0x60, 0x43,
    0x74, 0x8d, 0xfe, 0x57, 0x0b, 0x87, 0x06, 0xf7, 0x2b, 0x04, 0x35, 0xfd, 0xaa, 0x0e, 0x27, 0xde,
    0x0d, 0xc5, 0x02, 0xb1, 0xfb, 0xc6, 0xad, 0xa9, 0x53, 0x00, 0x00, 0x01, 0x00, 0x53, 0x00, 0x00,
    0x03, 0x9a, 0x04, 0x3a, 0x00, 0x09, 0x00, 0x2f, 0x40, 0x2c, 0x06, 0x01, 0x00, 0x01, 0x01, 0x01,
    0x03, 0x02, 0x02, 0x4c, 0x00, 0x00, 0x00, 0x01, 0x5f, 0x00, 0x01, 0x01, 0x53, 0x4d, 0x00, 0x02,
    0x02, 0x03, 0x5f, 0x04, 0x01, 0x03, 0x03, 0x51, 0x03, 0x4e, 0x00, 0x00, 0x00, 0x09, 0x00, 0x09,
    0x12, 0x11, 0x12, 0x05, 0x0b, 0x19, 0x2b, 0x33, 0x35, 0x01, 0x21, 0x35, 0x21, 0x15, 0x01, 0x21,
    0x15, 0x53, 0x02, 0x5d, 0xfd, 0xc5, 0x03, 0x10, 0xfd, 0xa2, 0x02, 0x73, 0x89, 0x03, 0x26, 0x8b,
    0x89, 0xfc, 0xda, 0x8b, 0x00, 0x01, 0x00, 0x22, 0xfe, 0x57, 0x02, 0x88, 0x05, 0xcc, 0x00, 0x23,
    0x00, 0x3a, 0x40, 0x37, 0x19, 0x01, 0x01, 0x02, 0x01, 0x4c, 0x00, 0x02, 0x00, 0x01, 0x05, 0x02,
    0x01, 0x69, 0x00, 0x04, 0x04, 0x03, 0x61, 0x00, 0x03, 0x03, 0x52, 0x4d, 0x00, 0x05, 0x05, 0x00,
    0x61, 0x06, 0x01, 0x00, 0x00, 0x55, 0x00, 0x4e, 0x01, 0x00, 0x22, 0x20, 0x13, 0x11, 0x10, 0x0e,
    0x09, 0x08, 0x07, 0x06, 0x00, 0x23, 0x01, 0x23, 0x07, 0x0b, 0x16, 0x2b, 0x01, 0x22, 0x26, 0x35,
    0x11, 0x34, 0x26, 0x27, 0x35, 0x36, 0x36, 0x35, 0x11, 0x34, 0x36, 0x33, 0x33, 0x15, 0x23, 0x22,
    0x06, 0x15, 0x11, 0x14, 0x06, 0x07, 0x15, 0x16, 0x16, 0x15, 0x11, 0x14, 0x16, 0x33, 0x33, 0x15,
    0x02, 0x01, 0x7f, 0x89, 0x69, 0x6e, 0x6d, 0x6a, 0x85, 0x83, 0x87, 0x3f, 0x5b, 0x4d, 0x6a, 0x58,
    0x59, 0x69, 0x4d, 0x5b, 0x3f, 0xfe, 0x57, 0x9a, 0x8b, 0x01, 0x69, 0x75, 0x73, 0x05, 0x7f, 0x04,
    0x73, 0x75, 0x01, 0x6a, 0x8d, 0x98, 0x81, 0x6b, 0x6c, 0xfe, 0x9c, 0x5e, 0x89, 0x15, 0x02, 0x15,
    0x88, 0x61, 0xfe, 0x9b, 0x6a, 0x6d, 0x81, 0x00, 0x00, 0x01, 0x00, 0xb7, 0xfe, 0x4e, 0x01, 0x5d,
    0x05, 0xcc, 0x00, 0x03, 0x00, 0x19, 0x40, 0x16, 0x00, 0x00, 0x00, 0x52, 0x4d, 0x02, 0x01, 0x01,
    0x01, 0x55, 0x01, 0x4e, 0x00, 0x00, 0x00, 0x03, 0x00, 0x03, 0x11, 0x03, 0x0b, 0x17, 0x2b, 0x13,
    0x11, 0x33, 0x11, 0xb7, 0xa6, 0xfe, 0x4e, 0x07, 0x7e, 0xf8, 0x82, 0x00, 0x00, 0x01, 0x00, 0x22,
    0xfe, 0x57, 0x02, 0x87, 0x05, 0xcc, 0x00, 0x23, 0x00, 0x3a, 0x40, 0x37, 0x07, 0x01, 0x04, 0x03,
    0x01, 0x4c, 0x00, 0x03, 0x00, 0x04, 0x00, 0x03, 0x04, 0x69, 0x00, 0x01, 0x01, 0x02, 0x61, 0x00,
    0x02, 0x02, 0x52, 0x4d, 0x06, 0x01, 0x00, 0x00, 0x05, 0x61, 0x00, 0x05, 0x05, 0x55, 0x05, 0x4e,
    0x01, 0x00, 0x22, 0x20, 0x1b, 0x1a, 0x19, 0x18, 0x13, 0x11, 0x10, 0x0e, 0x00, 0x23, 0x01, 0x23,
    0x07, 0x0b, 0x16, 0x2b, 0x13, 0x32, 0x36, 0x35, 0x11, 0x34, 0x36, 0x37, 0x35, 0x26, 0x26, 0x35,
    0x11, 0x34, 0x26, 0x23, 0x23, 0x35, 0x33, 0x32, 0x16, 0x15, 0x11, 0x14, 0x16, 0x17, 0x15, 0x06,
    0x06, 0x15, 0x11, 0x14, 0x06, 0x23, 0x23, 0x35, 0x5e, 0x5b, 0x4f, 0x68, 0x59, 0x56, 0x6b, 0x4f,
    0x5b, 0x3c, 0x84, 0x83, 0x85, 0x6a, 0x6f, 0x70, 0x69, 0x89, 0x7f, 0x84, 0xfe, 0xd8, 0x6d, 0x6a,
    0x01, 0x65, 0x62, 0x88, 0x14, 0x02, 0x14, 0x87, 0x61, 0x01, 0x64, 0x6c, 0x6b, 0x81, 0x98, 0x8d,
    0xfe, 0x96, 0x74, 0x74, 0x04, 0x7f, 0x04, 0x74, 0x75, 0xfe, 0x97, 0x8a, 0x9b, 0x81, 0x00, 0x01,
    0x00, 0x5c, 0x02, 0x29, 0x04, 0x50, 0x03, 0x27, 0x00, 0x16, 0x00, 0x3f, 0xb1, 0x06, 0x64, 0x44,
    0x40, 0x34, 0x13, 0x09, 0x02, 0x03, 0x02, 0x14, 0x08, 0x02, 0x00, 0x01, 0x02, 0x4c, 0x00, 0x03,
    0x01, 0x00, 0x03, 0x59, 0x00, 0x02, 0x00, 0x01, 0x00, 0x02, 0x01, 0x69, 0x00, 0x03, 0x03, 0x00,
    0x61, 0x04, 0x01, 0x00, 0x03, 0x00, 0x51, 0x01, 0x00, 0x12, 0x10, 0x0c, 0x0a, 0x06, 0x04, 0x00,
    0x16, 0x01, 0x16, 0x05, 0x0b, 0x16, 0x2b, 0xb1, 0x06, 0x00, 0x44, 0x01, 0x22, 0x26, 0x27, 0x26,
    0x23, 0x22, 0x06, 0x07, 0x35, 0x36, 0x33, 0x32, 0x16, 0x17, 0x16, 0x16, 0x33, 0x32, 0x37, 0x15,
    0x06, 0x06, 0x03, 0x4c, 0x45, 0x91, 0x49, 0x81, 0x58, 0x43, 0x74, 0x41, 0x6f, 0x98, 0x34, 0x7f,
    0x82, 0x1f, 0x78, 0x2d, 0x82, 0x72, 0x3a, 0x75, 0x02, 0x29, 0x2c, 0x1a, 0x2d, 0x29, 0x2f, 0x8f,
    0x54, 0x1a, 0x2e, 0x0c, 0x21, 0x5c, 0x95, 0x2a, 0x26, 0x00, 0xff, 0xff, 0x00, 0x04, 0x00, 0x00,
    0x05, 0x52, 0x06, 0xb2, 0x02, 0x26, 0x00, 0x22, 0x00, 0x00, 0x00, 0x07, 0x00, 0xc8, 0x01, 0x6c,
    0x00, 0x00, 0xff, 0xff, 0x00, 0x04, 0x00, 0x00, 0x05, 0x52, 0x06, 0xfb, 0x02, 0x26, 0x00, 0x22,
    0x00, 0x00, 0x01, 0x07, 0x00, 0xb1, 0x01, 0x89, 0x00, 0x88, 0x00, 0x08, 0xb1, 0x02, 0x02, 0xb0,
    0x88, 0xb0, 0x35, 0x2b, 0xff, 0xff, 0x00, 0x68, 0xfe, 0x4e, 0x05, 0x79, 0x05, 0x96, 0x02, 0x26,
    0x00, 0x24, 0x00, 0x00, 0x00, 0x07, 0x00, 0xb2, 0x01, 0xfe, 0x00, 0x00, 0xff, 0xff, 0x00, 0xa8,
    0x00, 0x00, 0x04, 0xfe, 0x06, 0xf0, 0x02, 0x26, 0x00, 0x26, 0x00, 0x00, 0x00, 0x07, 0x00, 0xc6,
    0x01, 0xdf, 0x00, 0x00, 0xff, 0xff, 0x00, 0xa8, 0x00, 0x00, 0x05, 0x20, 0x07, 0x06, 0x02, 0x26,
    0x00, 0x2f, 0x00, 0x00, 0x00, 0x07, 0x00, 0xc9, 0x01, 0xa1, 0x00, 0x00, 0xff, 0xff, 0x00, 0x61,
    0xff, 0xec, 0x05, 0xd7, 0x06, 0xb2, 0x02, 0x26, 0x00, 0x30, 0x00, 0x00, 0x00, 0x07, 0x00, 0xc8,
    0x01, 0xd7, 0x00, 0x00, 0xff, 0xff, 0x00, 0x9e, 0xff, 0xec, 0x05, 0x29, 0x06, 0xb2, 0x02, 0x26,
    0x00, 0x36, 0x00, 0x00, 0x00, 0x07, 0x00, 0xc8, 0x01, 0x9e, 0x00, 0x00, 0xff, 0xff, 0x00, 0x57,
    0xff, 0xec, 0x04, 0x73, 0x05, 0xe4, 0x02, 0x26, 0x00, 0x42, 0x00, 0x00, 0x00, 0x07, 0x00, 0x88,
    0x01, 0x54, 0x00, 0x00, 0xff, 0xff, 0x00, 0x57, 0xff, 0xec, 0x04, 0x73, 0x05, 0xe4, 0x02, 0x26,
    0x00, 0x42, 0x00, 0x00, 0x00, 0x07, 0x00, 0x41, 0x00, 0xbc, 0x00, 0x00, 0xff, 0xff, 0x00, 0x57,
    0xff, 0xec, 0x04, 0x73, 0x05, 0xd3, 0x02, 0x26, 0x00, 0x42, 0x00, 0x00, 0x00, 0x07, 0x00, 0xaf,
    0x00, 0xda, 0x00, 0x00, 0xff, 0xff, 0x00, 0x57, 0xff, 0xec, 0x04, 0x73, 0x05, 0x7b, 0x02, 0x26,
    0x00, 0x42, 0x00, 0x00, 0x00, 0x07, 0x00, 0x89, 0x00, 0xeb, 0x00, 0x00, 0xff, 0xff, 0x00, 0x57,
    0xff, 0xec, 0x04, 0x73, 0x05, 0xbd, 0x02, 0x26, 0x00, 0x42, 0x00, 0x00, 0x00, 0x07, 0x00, 0xb0,
    0x00, 0xf5, 0x00, 0x00, 0xff, 0xff, 0x00, 0x57, 0xff, 0xec, 0x04, 0x73, 0x06, 0x73, 0x02, 0x26,
    0x00, 0x42, 0x00, 0x00, 0x00, 0x07, 0x00, 0xb1, 0x01, 0x08, 0x00, 0x00, 0xff, 0xff, 0x00, 0x57,
    0xfe, 0x4e, 0x03, 0xca, 0x04, 0x4e, 0x02, 0x26, 0x00, 0x44, 0x00, 0x00, 0x00, 0x07, 0x00, 0xb2,
    0x01, 0x0c, 0x00, 0x00, 0xff, 0xff, 0x00, 0x57, 0xff, 0xec, 0x04, 0x18, 0x05, 0xe4, 0x02, 0x26,
    0x00, 0x46, 0x00, 0x00, 0x00, 0x07, 0x00, 0x88, 0x01, 0x70, 0x00, 0x00, 0xff, 0xff, 0x00, 0x57,
    0xff, 0xec, 0x04, 0x18, 0x05, 0xe4, 0x02, 0x26, 0x00, 0x46, 0x00, 0x00, 0x00, 0x07, 0x00, 0x41,
    0x00, 0xdd, 0x00, 0x00, 0xff, 0xff, 0x00, 0x57, 0xff, 0xec, 0x04, 0x18, 0x05, 0xd3, 0x02, 0x26,
    0x00, 0x46, 0x00, 0x00, 0x00, 0x07, 0x00, 0xaf, 0x00, 0xf5, 0x00, 0x00, 0xff, 0xff, 0x00, 0x57,
    0xff, 0xec, 0x04, 0x18, 0x05, 0x7b, 0x02, 0x26, 0x00, 0x46, 0x00, 0x00, 0x00, 0x07, 0x00, 0x89,
    0x00, 0xf8, 0x00, 0x00, 0xff, 0xff, 0x00, 0x87, 0x00, 0x00, 0x02, 0x2f, 0x05, 0xe4, 0x02, 0x26,
    0x00, 0xae, 0x00, 0x00, 0x00, 0x06, 0x00, 0x88, 0x3f, 0x00, 0xff, 0xff, 0x00, 0x0a, 0x00, 0x00,
    0x01, 0xb2, 0x05, 0xe4, 0x02, 0x26, 0x00, 0xae, 0x00, 0x00, 0x00, 0x06, 0x00, 0x41, 0xa0, 0x00,
    0xff, 0xff, 0xff, 0xd3, 0x00, 0x00, 0x02, 0x69, 0x05, 0xd3, 0x02, 0x26, 0x00, 0xae, 0x00, 0x00,
    0x00, 0x06, 0x00, 0xaf, 0xd3, 0x00, 0xff, 0xff, 0x00, 0x08, 0x00, 0x00, 0x02, 0x35, 0x05, 0x7b,
    0x02, 0x26, 0x00, 0xae, 0x00, 0x00, 0x00, 0x06, 0x00, 0x89, 0xdb, 0x00, 0xff, 0xff, 0x00, 0x8c,
    0x00, 0x00, 0x03, 0xf2, 0x05, 0xbd, 0x00, 0x26, 0x00, 0x4f, 0x04, 0x00, 0x00, 0x07, 0x00, 0xb0,
    0x00, 0xf5, 0x00, 0x00, 0xff, 0xff, 0x00, 0x56, 0xff, 0xec, 0x04, 0x1d, 0x05, 0xe4, 0x02, 0x26,
    0x00, 0x50, 0x00, 0x00, 0x00, 0x07, 0x00, 0x88, 0x01, 0x67, 0x00, 0x00, 0xff, 0xff, 0x00, 0x56,
    0xff, 0xec, 0x04, 0x1d, 0x05, 0xe4, 0x02, 0x26, 0x00, 0x50, 0x00, 0x00, 0x00, 0x07, 0x00, 0x41,
    0x00, 0xdf, 0x00, 0x00, 0xff, 0xff, 0x00, 0x56, 0xff, 0xec, 0x04, 0x1d, 0x05, 0xd3, 0x02, 0x26,
    0x00, 0x50, 0x00, 0x00, 0x00, 0x07, 0x00, 0xaf, 0x00, 0xf0, 0x00, 0x00, 0xff, 0xff, 0x00, 0x56,
    0xff, 0xec, 0x04, 0x1d, 0x05, 0x7b, 0x02, 0x26, 0x00, 0x50, 0x00, 0x00, 0x00, 0x07, 0x00, 0x89,
    0x00, 0xfa, 0x00, 0x00, 0xff, 0xff, 0x00, 0x56, 0xff, 0xec, 0x04, 0x1d, 0x05, 0xbd, 0x02, 0x26,
    0x00, 0x50, 0x00, 0x00, 0x00, 0x07, 0x00, 0xb0, 0x00, 0xf7, 0x00, 0x00, 0xff, 0xff, 0x00, 0x8b,
    0xff, 0xec, 0x03, 0xf1, 0x05, 0xe4, 0x00, 0x26, 0x00, 0x56, 0x06, 0x00, 0x00, 0x07, 0x00, 0x88,
    0x01, 0x57, 0x00, 0x00, 0xff, 0xff, 0x00, 0x8b, 0xff, 0xec, 0x03, 0xf1, 0x05, 0xe4, 0x00, 0x26,
    0x00, 0x56, 0x06, 0x00, 0x00, 0x07, 0x00, 0x41, 0x00, 0xec, 0x00, 0x00, 0xff, 0xff, 0x00, 0x8b,
    0xff, 0xec, 0x03, 0xf1, 0x05, 0xd3, 0x00, 0x26, 0x00, 0x56, 0x06, 0x00, 0x00, 0x07, 0x00, 0xaf,
    0x00, 0xef, 0x00, 0x00, 0xff, 0xff, 0x00, 0x8b, 0xff, 0xec, 0x03, 0xf1, 0x05, 0x7b, 0x00, 0x26,
    0x00, 0x56, 0x06, 0x00, 0x00, 0x07, 0x00, 0x89, 0x00, 0xed, 0x00, 0x00, 0x00, 0x02, 0x00, 0x7a,
    0x03, 0x5c, 0x02, 0xb8, 0x05, 0x96, 0x00, 0x08, 0x00, 0x12, 0x00, 0x2a, 0xb1, 0x06, 0x64, 0x44,
    0x40, 0x1f, 0x00, 0x01, 0x00, 0x02, 0x03, 0x01, 0x02, 0x69, 0x00, 0x03, 0x00, 0x00, 0x03, 0x59,
    0x00, 0x03, 0x03, 0x00, 0x61, 0x00, 0x00, 0x03, 0x00, 0x51, 0x23, 0x14, 0x13, 0x12, 0x04, 0x0b,
    0x1a, 0x2b, 0xb1, 0x06, 0x00, 0x44, 0x01, 0x14, 0x06, 0x22, 0x26, 0x34, 0x36, 0x32, 0x16, 0x07,
    0x34, 0x26, 0x22, 0x06, 0x14, 0x16, 0x33, 0x32, 0x36, 0x02, 0xb8, 0xa9, 0xec, 0xa9, 0xa7, 0xf0,
    0xa7, 0x6d, 0x67, 0x96, 0x67, 0x69, 0x49, 0x4a, 0x68, 0x04, 0x79, 0x77, 0xa6, 0xa8, 0xea, 0xa8,
    0xa6, 0x77, 0x4c, 0x68, 0x6a, 0x94, 0x6a, 0x69, 0x00, 0x01, 0x00, 0x87, 0xff, 0xe1, 0x03, 0xfa,
    0x05, 0x81, 0x00, 0x1f, 0x00, 0x6a, 0x40, 0x10, 0x13, 0x10, 0x02, 0x04, 0x03, 0x16, 0x01, 0x01,
    0x04, 0x0a, 0x07, 0x02, 0x02, 0x00, 0x03, 0x4c, 0x4b, 0xb0, 0x21, 0x50, 0x58, 0x40, 0x1e, 0x00,
    0x01, 0x04, 0x00, 0x04, 0x01, 0x00, 0x80, 0x00, 0x04, 0x04, 0x03, 0x5f, 0x00, 0x03, 0x03, 0x50,
    0x4d, 0x05, 0x01, 0x00, 0x00, 0x02, 0x5f, 0x00, 0x02, 0x02, 0x51, 0x02, 0x4e, 0x1b, 0x40, 0x1b,
    0x00, 0x01, 0x04, 0x00, 0x04, 0x01, 0x00, 0x80, 0x05, 0x01, 0x00, 0x00, 0x02, 0x00, 0x02, 0x63,
    0x00, 0x04, 0x04, 0x03, 0x5f, 0x00, 0x03, 0x03, 0x50, 0x04, 0x4e, 0x59, 0x40, 0x11, 0x01, 0x00,
    0x1b, 0x19, 0x12, 0x11, 0x09, 0x08, 0x04, 0x03, 0x00, 0x1f, 0x01, 0x1f, 0x06, 0x0b, 0x16, 0x2b,
    0x01, 0x32, 0x36, 0x37, 0x17, 0x06, 0x06, 0x07, 0x15, 0x23, 0x35, 0x26, 0x02, 0x11, 0x34, 0x12,
    0x37, 0x35, 0x33, 0x15, 0x16, 0x16, 0x17, 0x07, 0x26, 0x26, 0x23, 0x22, 0x06, 0x15, 0x14, 0x16,
    0x02, 0x54, 0x60, 0x81, 0x0f, 0xb6, 0x13, 0xbe, 0x93, 0x7c, 0xc7, 0xcc, 0xcc, 0xc7, 0x7c, 0x8f,
    0xb4, 0x1b, 0xb9, 0x0e, 0x72, 0x69, 0x8f, 0x80, 0x88, 0x01, 0x15, 0x68, 0x6c, 0x0c, 0x90, 0xb6,
    0x0e, 0xa8, 0xa8, 0x12, 0x01, 0x1d, 0x01, 0x01, 0xfd, 0x01, 0x1f, 0x11, 0x9b, 0x9b, 0x0f, 0xa6,
    0x8b, 0x0e, 0x5a, 0x6a, 0xbe, 0xe1, 0xd8, 0xd0, 0x00, 0x01, 0x00, 0x3a, 0x00, 0x00, 0x04, 0x50,
    0x05, 0x96, 0x00, 0x25, 0x00, 0x39, 0x40, 0x36, 0x14, 0x13, 0x02, 0x02, 0x04, 0x25, 0x05, 0x02,
    0x07, 0x01, 0x02, 0x4c, 0x05, 0x01, 0x02, 0x06, 0x01, 0x01, 0x07, 0x02, 0x01, 0x67, 0x00, 0x04,
    0x04, 0x03, 0x61, 0x00, 0x03, 0x03, 0x56, 0x4d, 0x00, 0x07, 0x07, 0x00, 0x5f, 0x00, 0x00, 0x00,
    0x51, 0x00, 0x4e, 0x24, 0x11, 0x13, 0x25, 0x23, 0x11, 0x15, 0x22, 0x08, 0x0b, 0x1e, 0x2b, 0x01,
    0x06, 0x06, 0x23, 0x21, 0x35, 0x36, 0x36, 0x35, 0x35, 0x23, 0x35, 0x33, 0x11, 0x34, 0x36, 0x33,
    0x32, 0x16, 0x17, 0x07, 0x26, 0x26, 0x23, 0x22, 0x06, 0x15, 0x11, 0x21, 0x15, 0x21, 0x15, 0x14,
    0x06, 0x07, 0x21, 0x32, 0x37, 0x04, 0x50, 0x11, 0xb0, 0x90, 0xfd, 0x46, 0x59, 0x56, 0xba, 0xba,
    0xce, 0xc4, 0x93, 0xc8, 0x22, 0xae, 0x15, 0x6f, 0x47, 0x72, 0x70, 0x01, 0x98, 0xfe, 0x68, 0x5c,
    0x4d, 0x01, 0xe3, 0xae, 0x1d, 0x01, 0x37, 0x96, 0xa1, 0x9a, 0x2e, 0xa0, 0x79, 0x90, 0x81, 0x01,
    0x18, 0xc3, 0xc9, 0x79, 0x6d, 0x39, 0x40, 0x4b, 0x73, 0x7d, 0xfe, 0xe0, 0x81, 0x7e, 0x77, 0xba,
    0x29, 0xb0, 0x00, 0x02, 0x00, 0x73, 0xff, 0x54, 0x04, 0x00, 0x05, 0xcc, 0x00, 0x33, 0x00, 0x40,
    0x00, 0x46, 0x40, 0x43, 0x2e, 0x04, 0x03, 0x03, 0x04, 0x01, 0x1e, 0x1d, 0x14, 0x03, 0x03, 0x05,
    0x02, 0x4c, 0x00, 0x04, 0x01, 0x05, 0x01, 0x04, 0x05, 0x80, 0x00, 0x05, 0x03, 0x01, 0x05, 0x03,
    0x7e, 0x00, 0x03, 0x00, 0x02, 0x03, 0x02, 0x66, 0x00, 0x01, 0x01, 0x00, 0x61, 0x06, 0x01, 0x00,
    0x00, 0x52, 0x01, 0x4e, 0x01, 0x00, 0x3f, 0x3e, 0x38, 0x37, 0x22, 0x20, 0x1b, 0x19, 0x07, 0x05,
    0x00, 0x33, 0x01, 0x33, 0x07, 0x0b, 0x16, 0x2b, 0x01, 0x32, 0x16, 0x17, 0x07, 0x26, 0x23, 0x22,
    0x06, 0x15, 0x14, 0x16, 0x16, 0x17, 0x1e, 0x02, 0x15, 0x14, 0x06, 0x07, 0x16, 0x16, 0x15, 0x14,
    0x06, 0x23, 0x22, 0x26, 0x27, 0x37, 0x16, 0x16, 0x33, 0x32, 0x36, 0x35, 0x34, 0x26, 0x26, 0x27,
    0x26, 0x26, 0x35, 0x34, 0x36, 0x37, 0x26, 0x26, 0x35, 0x34, 0x36, 0x01, 0x34, 0x26, 0x27, 0x06,
    0x06, 0x15, 0x14, 0x16, 0x16, 0x17, 0x36, 0x36, 0x02, 0x4c, 0xad, 0xd5, 0x1b, 0xa1, 0x1b, 0xe1,
    0x7d, 0x81, 0x3c, 0x6f, 0x82, 0x93, 0x9c, 0x56, 0x77, 0x64, 0x70, 0x65, 0xe7, 0xd2, 0xd1, 0xdb,
    0x22, 0xa1, 0x14, 0x88, 0x91, 0x88, 0x91, 0x42, 0x7b, 0x97, 0xc2, 0xab, 0x7b, 0x69, 0x60, 0x6f,
    0xd3, 0x01, 0xe1, 0x8b, 0xb0, 0x6d, 0x81, 0x3b, 0x6f, 0x81, 0x77, 0x87, 0x05, 0xcc, 0x85, 0x7f,
    0x14, 0x96, 0x4f, 0x47, 0x30, 0x46, 0x34, 0x1f, 0x23, 0x53, 0x76, 0x51, 0x63, 0x96, 0x18, 0x30,
    0x81, 0x5b, 0x94, 0xa9, 0x85, 0x8b, 0x1f, 0x5a, 0x52, 0x58, 0x52, 0x39, 0x4d, 0x3a, 0x25, 0x2d,
    0x9c, 0x70, 0x59, 0x94, 0x1e, 0x20, 0x86, 0x56, 0x8b, 0x9b, 0xfc, 0xcb, 0x48, 0x68, 0x29, 0x06,
    0x6a, 0x54, 0x31, 0x49, 0x36, 0x21, 0x02, 0x65, 0x00, 0x01, 0x00, 0x50, 0xfe, 0xf8, 0x03, 0xf5,
    0x05, 0x81, 0x00, 0x0f, 0x00, 0x2b, 0x40, 0x28, 0x00, 0x03, 0x01, 0x00, 0x01, 0x03, 0x00, 0x80,
    0x02, 0x01, 0x00, 0x00, 0x84, 0x06, 0x05, 0x02, 0x01, 0x01, 0x04, 0x5f, 0x00, 0x04, 0x04, 0x50,
    0x01, 0x4e, 0x00, 0x00, 0x00, 0x0f, 0x00, 0x0f, 0x24, 0x11, 0x11, 0x11, 0x11, 0x07, 0x0b, 0x1b,
    0x2b, 0x01, 0x11, 0x23, 0x11, 0x23, 0x11, 0x23, 0x11, 0x22, 0x26, 0x35, 0x34, 0x36, 0x33, 0x21,
    0x15, 0x03, 0x74, 0x70, 0xd9, 0x71, 0xa8, 0xc2, 0xc5, 0xad, 0x02, 0x33, 0x05, 0x1b, 0xf9, 0xdd,
    0x06, 0x23, 0xf9, 0xdd, 0x03, 0xbe, 0xb9, 0xaa, 0xa9, 0xbf, 0x66, 0x00, 0x00, 0x01, 0x00, 0x8e,
    0xff, 0xec, 0x04, 0x8f, 0x05, 0xcc, 0x00, 0x31, 0x00, 0x68, 0x4b, 0xb0, 0x19, 0x50, 0x58, 0x40,
    0x0a, 0x06, 0x01, 0x01, 0x02, 0x05, 0x01, 0x00, 0x01, 0x02, 0x4c, 0x1b, 0x40, 0x0a, 0x06, 0x01,
    0x01, 0x02, 0x05, 0x01, 0x03, 0x01, 0x02, 0x4c, 0x59, 0x4b, 0xb0, 0x19, 0x50, 0x58, 0x40, 0x16,
    0x00, 0x02, 0x02, 0x04, 0x61, 0x00, 0x04, 0x04, 0x52, 0x4d, 0x00, 0x01, 0x01, 0x00, 0x61, 0x03,
    0x01, 0x00, 0x00, 0x57, 0x00, 0x4e, 0x1b, 0x40, 0x1a, 0x00, 0x02, 0x02, 0x04, 0x61, 0x00, 0x04,
    0x04, 0x52, 0x4d, 0x00, 0x03, 0x03, 0x51, 0x4d, 0x00, 0x01, 0x01, 0x00, 0x61, 0x00, 0x00, 0x00,
    0x57, 0x00, 0x4e, 0x59, 0x40, 0x0b, 0x25, 0x23, 0x20, 0x1f, 0x1c, 0x1a, 0x24, 0x22, 0x05, 0x0b,
    0x18, 0x2b, 0x01, 0x14, 0x06, 0x23, 0x22, 0x27, 0x27, 0x16, 0x16, 0x33, 0x32, 0x36, 0x35, 0x34,
    0x26, 0x27, 0x26, 0x26, 0x35, 0x34, 0x36, 0x37, 0x36, 0x36, 0x35, 0x34, 0x26, 0x23, 0x22, 0x06,
    0x15, 0x11, 0x23, 0x11, 0x34, 0x36, 0x33, 0x32, 0x16, 0x15, 0x14, 0x07, 0x06, 0x06, 0x15, 0x14,
    0x16, 0x16, 0x17, 0x16, 0x04, 0x8f, 0xbc, 0xaa, 0xab, 0x70, 0x02, 0x34, 0xa0, 0x45, 0x5c, 0x62,
    0x55, 0x61, 0x5c, 0x5b, 0x39, 0x36, 0x3a, 0x35, 0x86, 0x6d, 0x94, 0x8b, 0xb4, 0xeb, 0xe8, 0xbe,
    0xe1, 0x71, 0x4f, 0x22, 0x37, 0x52, 0x30, 0xb8, 0x01, 0x27, 0x96, 0xa5, 0x31, 0xa4, 0x1d, 0x28,
    0x56, 0x4f, 0x40, 0x66, 0x3a, 0x36, 0x84, 0x56, 0x3d, 0x64, 0x2d, 0x30, 0x54, 0x32, 0x4d, 0x5d,
    0xa0, 0xa2, 0xfc, 0x03, 0x04, 0x03, 0xe3, 0xe6, 0xa1, 0x88, 0x8f, 0x67, 0x48, 0x31, 0x1d, 0x26,
    0x3b, 0x39, 0x20, 0x7c, 0x00, 0x04, 0x00, 0x1f, 0xff, 0xf0, 0x05, 0xc5, 0x05, 0x96, 0x00, 0x0f,
    0x00, 0x1e, 0x00, 0x2c, 0x00, 0x35, 0x00, 0x57, 0xb1, 0x06, 0x64, 0x44, 0x40, 0x4c, 0x2b, 0x01,
    0x04, 0x09, 0x01, 0x4c, 0x0a, 0x07, 0x02, 0x05, 0x04, 0x03, 0x04, 0x05, 0x03, 0x80, 0x00, 0x01,
    0x00, 0x02, 0x06, 0x01, 0x02, 0x69, 0x00, 0x06, 0x00, 0x08, 0x09, 0x06, 0x08, 0x67, 0x00, 0x09,
    0x00, 0x04, 0x05, 0x09, 0x04, 0x67, 0x00, 0x03, 0x00, 0x00, 0x03, 0x59, 0x00, 0x03, 0x03, 0x00,
    0x61, 0x00, 0x00, 0x03, 0x00, 0x51, 0x1f, 0x1f, 0x34, 0x32, 0x31, 0x2f, 0x1f, 0x2c, 0x1f, 0x2c,
    0x21, 0x11, 0x14, 0x16, 0x26, 0x26, 0x23, 0x0b, 0x0b, 0x1d, 0x2b, 0xb1, 0x06, 0x00, 0x44, 0x01,
    0x14, 0x02, 0x04, 0x23, 0x22, 0x24, 0x02, 0x35, 0x34, 0x12, 0x24, 0x33, 0x32, 0x04, 0x12, 0x07,
    0x34, 0x02, 0x24, 0x23, 0x22, 0x04, 0x02, 0x15, 0x14, 0x12, 0x04, 0x20, 0x24, 0x12, 0x05, 0x03,
    0x23, 0x11, 0x23, 0x11, 0x21, 0x32, 0x16, 0x15, 0x14, 0x06, 0x07, 0x13, 0x03, 0x34, 0x26, 0x23,
    0x23, 0x11, 0x33, 0x32, 0x36, 0x05, 0xc5, 0xc1, 0xfe, 0xaf, 0xc1, 0xc5, 0xfe, 0xad, 0xbb, 0xc2,
    0x01, 0x50, 0xc1, 0xc2, 0x01, 0x51, 0xc0, 0x5c, 0xa8, 0xfe, 0xdb, 0xaa, 0xa8, 0xfe, 0xdc, 0xa8,
    0xa9, 0x01, 0x22, 0x01, 0x52, 0x01, 0x26, 0xa8, 0xfe, 0x52, 0xc7, 0xa1, 0x7f, 0x01, 0x33, 0x8e,
    0x97, 0x68, 0x55, 0xdd, 0x9f, 0x5f, 0x51, 0xaa, 0xb6, 0x50, 0x54, 0x02, 0xc3, 0xc1, 0xfe, 0xaf,
    0xc1, 0xc9, 0x01, 0x4d, 0xbd, 0xc1, 0x01, 0x50, 0xc2, 0xc3, 0xfe, 0xb2, 0xc2, 0xa9, 0x01, 0x21,
    0xaa, 0xa9, 0xfe, 0xdc, 0xa7, 0xa9, 0xfe, 0xdc, 0xa8, 0xa8, 0x01, 0x24, 0xf9, 0x01, 0x50, 0xfe,
    0xb0, 0x03, 0x3f, 0x7e, 0x6f, 0x66, 0x7b, 0x13, 0xfe, 0xa2, 0x02, 0x50, 0x45, 0x48, 0xfe, 0xd3,
    0x55, 0x00, 0x00, 0x03, 0x00, 0x1f, 0xff, 0xf0, 0x05, 0xc5, 0x05, 0x96, 0x00, 0x0f, 0x00, 0x1e,
    0x00, 0x36, 0x00, 0x47, 0xb1, 0x06, 0x64, 0x44, 0x40, 0x3c, 0x31, 0x30, 0x25, 0x24, 0x04, 0x04,
    0x07, 0x01, 0x4c, 0x00, 0x01, 0x00, 0x02, 0x06, 0x01, 0x02, 0x69, 0x00, 0x06, 0x00, 0x07, 0x04,
    0x06, 0x07, 0x69, 0x00, 0x04, 0x00, 0x05, 0x03, 0x04, 0x05, 0x69, 0x00, 0x03, 0x00, 0x00, 0x03,
    0x59, 0x00, 0x03, 0x03, 0x00, 0x61, 0x00, 0x00, 0x03, 0x00, 0x51, 0x24, 0x24, 0x24, 0x25, 0x16,
    0x26, 0x26, 0x23, 0x08, 0x0b, 0x1e, 0x2b, 0xb1, 0x06, 0x00, 0x44, 0x01, 0x14, 0x02, 0x04, 0x23,
    0x22, 0x24, 0x02, 0x35, 0x34, 0x12, 0x24, 0x33, 0x32, 0x04, 0x12, 0x07, 0x34, 0x02, 0x24, 0x23,
    0x22, 0x04, 0x02, 0x15, 0x14, 0x12, 0x04, 0x20, 0x24, 0x12, 0x25, 0x14, 0x16, 0x33, 0x32, 0x37,
    0x17, 0x06, 0x06, 0x23, 0x22, 0x26, 0x35, 0x34, 0x36, 0x33, 0x32, 0x17, 0x07, 0x26, 0x26, 0x23,
    0x22, 0x06, 0x05, 0xc5, 0xc1, 0xfe, 0xaf, 0xc1, 0xc5, 0xfe, 0xad, 0xbb, 0xc2, 0x01, 0x50, 0xc1,
    0xc2, 0x01, 0x51, 0xc0, 0x5c, 0xa8, 0xfe, 0xdb, 0xaa, 0xa8, 0xfe, 0xdc, 0xa8, 0xa9, 0x01, 0x22,
    0x01, 0x52, 0x01, 0x26, 0xa8, 0xfc, 0x89, 0x8e, 0x7d, 0x9e, 0x4b, 0x73, 0x3e, 0xa9, 0x75, 0xbc,
    0xd0, 0xc8, 0xbd, 0xf4, 0x60, 0x72, 0x20, 0x74, 0x4c, 0x7f, 0x87, 0x02, 0xc3, 0xc1, 0xfe, 0xaf,
    0xc1, 0xc9, 0x01, 0x4d, 0xbd, 0xc1, 0x01, 0x50, 0xc2, 0xc3, 0xfe, 0xb2, 0xc2, 0xa9, 0x01, 0x21,
    0xaa, 0xa9, 0xfe, 0xdc, 0xa7, 0xa9, 0xfe, 0xdc, 0xa8, 0xa8, 0x01, 0x24, 0xab, 0x9b, 0xab, 0x9c,
    0x23, 0x79, 0x68, 0xe2, 0xcc, 0xcb, 0xdd, 0xd1, 0x21, 0x45, 0x44, 0xa1, 0x00, 0x01, 0x00, 0x48,
    0x04, 0xb1, 0x01, 0xf0, 0x05, 0xe4, 0x00, 0x05, 0x00, 0x26, 0xb1, 0x06, 0x64, 0x44, 0x40, 0x1b,
    0x04, 0x01, 0x02, 0x01, 0x00, 0x01, 0x4c, 0x00, 0x00, 0x01, 0x00, 0x85, 0x02, 0x01, 0x01, 0x01,
    0x76, 0x00, 0x00, 0x00, 0x05, 0x00, 0x05, 0x12, 0x03, 0x0b, 0x17, 0x2b, 0xb1, 0x06, 0x00, 0x44,
    0x13, 0x35, 0x13, 0x33, 0x15, 0x01, 0x48, 0xd9, 0xcf, 0xfe, 0xb6, 0x04, 0xb1, 0x14, 0x01, 0x1f,
    0x1d, 0xfe, 0xea, 0x00, 0x00, 0x02, 0x00, 0x2d, 0x04, 0xc3, 0x02, 0x5a, 0x05, 0x7b, 0x00, 0x03,
    0x00, 0x07, 0x00, 0x32, 0xb1, 0x06, 0x64, 0x44, 0x40, 0x27, 0x02, 0x01, 0x00, 0x01, 0x01, 0x00,
    0x57, 0x02, 0x01, 0x00, 0x00, 0x01, 0x5f, 0x05, 0x03, 0x04, 0x03, 0x01, 0x00, 0x01, 0x4f, 0x04,
    0x04, 0x00, 0x00, 0x04, 0x07, 0x04, 0x07, 0x06, 0x05, 0x00, 0x03, 0x00, 0x03, 0x11, 0x06, 0x0b,
    0x17, 0x2b, 0xb1, 0x06, 0x00, 0x44, 0x13, 0x35, 0x33, 0x15, 0x33, 0x35, 0x33, 0x15, 0x2d, 0xa5,
    0xe5, 0xa3, 0x04, 0xc3, 0xb8, 0xb8, 0xb8, 0xb8, 0x00, 0x02, 0x00, 0x18, 0x00, 0x00, 0x07, 0xa8,
    0x05, 0x81, 0x00, 0x0f, 0x00, 0x14, 0x00, 0x3f, 0x40, 0x3c, 0x00, 0x04, 0x00, 0x05, 0x09, 0x04,
    0x05, 0x67, 0x00, 0x09, 0x00, 0x00, 0x06, 0x09, 0x00, 0x67, 0x08, 0x01, 0x03, 0x03, 0x02, 0x5f,
    0x00, 0x02, 0x02, 0x50, 0x4d, 0x00, 0x06, 0x06, 0x01, 0x5f, 0x0a, 0x07, 0x02, 0x01, 0x01, 0x51,
    0x01, 0x4e, 0x00, 0x00, 0x14, 0x13, 0x11, 0x10, 0x00, 0x0f, 0x00, 0x0f, 0x11, 0x11, 0x11, 0x11,
    0x11, 0x11, 0x11, 0x0b, 0x0b, 0x1d, 0x2b, 0x21, 0x11, 0x21, 0x03, 0x23, 0x01, 0x21, 0x15, 0x21,
    0x11, 0x21, 0x15, 0x21, 0x11, 0x21, 0x15, 0x01, 0x23, 0x07, 0x01, 0x21, 0x03, 0xc9, 0xfd, 0xdc,
    0xc6, 0xc7, 0x02, 0xae, 0x04, 0xb9, 0xfd, 0x09, 0x02, 0xbb, 0xfd, 0x45, 0x03, 0x20, 0xfc, 0x21,
    0x97, 0x1c, 0xfe, 0xd5, 0x01, 0xde, 0x01, 0x9c, 0xfe, 0x64, 0x05, 0x81, 0x9c, 0xfe, 0x3c, 0x9a,
    0xfe, 0x15, 0x9c, 0x04, 0xee, 0x3f, 0xfd, 0x82, 0x00, 0x03, 0x00, 0x47, 0xff, 0xcb, 0x05, 0xf4,
    0x05, 0xba, 0x00, 0x14, 0x00, 0x1c, 0x00, 0x24, 0x00, 0x3e, 0x40, 0x3b, 0x10, 0x01, 0x05, 0x02,
    0x20, 0x1f, 0x18, 0x17, 0x13, 0x09, 0x06, 0x04, 0x05, 0x06, 0x01, 0x00, 0x04, 0x03, 0x4c, 0x00,
    0x01, 0x00, 0x01, 0x86, 0x00, 0x03, 0x03, 0x52, 0x4d, 0x00, 0x05, 0x05, 0x02, 0x61, 0x00, 0x02,
    0x02, 0x56, 0x4d, 0x00, 0x04, 0x04, 0x00, 0x61, 0x00, 0x00, 0x00, 0x57, 0x00, 0x4e, 0x26, 0x27,
    0x12, 0x25, 0x12, 0x23, 0x06, 0x0b, 0x1c, 0x2b, 0x01, 0x14, 0x02, 0x04, 0x23, 0x22, 0x27, 0x07,
    0x23, 0x37, 0x26, 0x11, 0x10, 0x00, 0x21, 0x32, 0x17, 0x37, 0x33, 0x07, 0x16, 0x03, 0x34, 0x27,
    0x01, 0x16, 0x33, 0x32, 0x00, 0x01, 0x14, 0x17, 0x01, 0x26, 0x23, 0x22, 0x00, 0x05, 0xd7, 0xa9,
    0xfe, 0xc4, 0xd7, 0xf6, 0xa8, 0x78, 0xbe, 0xc8, 0xae, 0x01, 0x72, 0x01, 0x4a, 0xf7, 0xa7, 0x79,
    0xc0, 0xc9, 0xac, 0xc3, 0x62, 0xfd, 0x3b, 0x7a, 0xb4, 0xf4, 0x01, 0x05, 0xfc, 0x0f, 0x65, 0x02,
    0xc3, 0x7c, 0xb2, 0xf2, 0xfe, 0xf8, 0x02, 0xc7, 0xdd, 0xfe, 0xb4, 0xb2, 0x70, 0x91, 0xf1, 0xc0,
    0x01, 0x4b, 0x01, 0x52, 0x01, 0x7d, 0x6e, 0x92, 0xf2, 0xbe, 0xfe, 0xbd, 0xe0, 0x90, 0xfc, 0xab,
    0x5b, 0x01, 0x2d, 0x01, 0x13, 0xe5, 0x95, 0x03, 0x55, 0x58, 0xfe, 0xd8, 0x00, 0x02, 0x00, 0x41,
    0x00, 0x00, 0x04, 0x24, 0x04, 0xc3, 0x00, 0x0b, 0x00, 0x0f, 0x00, 0x38, 0x40, 0x35, 0x04, 0x01,
    0x02, 0x08, 0x05, 0x02, 0x01, 0x00, 0x02, 0x01, 0x67, 0x00, 0x03, 0x00, 0x00, 0x06, 0x03, 0x00,
    0x67, 0x00, 0x06, 0x06, 0x07, 0x5f, 0x09, 0x01, 0x07, 0x07, 0x51, 0x07, 0x4e, 0x0c, 0x0c, 0x00,
    0x00, 0x0c, 0x0f, 0x0c, 0x0f, 0x0e, 0x0d, 0x00, 0x0b, 0x00, 0x0b, 0x11, 0x11, 0x11, 0x11, 0x11,
    0x0a, 0x0b, 0x1b, 0x2b, 0x01, 0x11, 0x23, 0x11, 0x21, 0x35, 0x21, 0x11, 0x33, 0x11, 0x21, 0x15,
    0x01, 0x35, 0x21, 0x15, 0x02, 0x7c, 0x93, 0xfe, 0x58, 0x01, 0xa8, 0x93, 0x01, 0xa8, 0xfc, 0x1d,
    0x03, 0xe3, 0x02, 0xa8, 0xfe, 0x75, 0x01, 0x8b, 0x91, 0x01, 0x8a, 0xfe, 0x76, 0x91, 0xfd, 0x58,
    0x91, 0x91, 0x00, 0x01, 0xff, 0xfe, 0x00, 0x00, 0x04, 0x76, 0x05, 0x81, 0x00, 0x16, 0x00, 0x39,
    0x40, 0x36, 0x14, 0x01, 0x00, 0x09, 0x01, 0x4c, 0x08, 0x01, 0x00, 0x07, 0x01, 0x01, 0x02, 0x00,
    0x01, 0x68, 0x06, 0x01, 0x02, 0x05, 0x01, 0x03, 0x04, 0x02, 0x03, 0x67, 0x0a, 0x01, 0x09, 0x09,
    0x50, 0x4d, 0x00, 0x04, 0x04, 0x51, 0x04, 0x4e, 0x16, 0x15, 0x13, 0x12, 0x11, 0x11, 0x11, 0x11,
    0x11, 0x11, 0x11, 0x11, 0x10, 0x0b, 0x0b, 0x1f, 0x2b, 0x01, 0x21, 0x15, 0x21, 0x15, 0x21, 0x15,
    0x21, 0x11, 0x23, 0x11, 0x21, 0x35, 0x21, 0x37, 0x21, 0x35, 0x21, 0x01, 0x33, 0x01, 0x01, 0x33,
    0x02, 0xd0, 0x01, 0x41, 0xfe, 0x81, 0x01, 0x7f, 0xfe, 0x81, 0xb2, 0xfe, 0x83, 0x01, 0x7d, 0x02,
    0xfe, 0x81, 0x01, 0x40, 0xfe, 0x5b, 0xc7, 0x01, 0x73, 0x01, 0x77, 0xc7, 0x02, 0xc5, 0x7d, 0x9a,
    0x7f, 0xfe, 0xd1, 0x01, 0x2f, 0x7f, 0x9a, 0x7d, 0x02, 0xbc, 0xfd, 0x79, 0x02, 0x87, 0x00, 0x01,
    0x00, 0x8c, 0xfe, 0x57, 0x04, 0x6d, 0x04, 0x3a, 0x00, 0x1e, 0x00, 0x37, 0x40, 0x34, 0x17, 0x11,
    0x02, 0x01, 0x00, 0x1d, 0x12, 0x02, 0x04, 0x01, 0x02, 0x4c, 0x02, 0x01, 0x00, 0x00, 0x53, 0x4d,
    0x03, 0x01, 0x01, 0x01, 0x04, 0x62, 0x05, 0x01, 0x04, 0x04, 0x57, 0x4d, 0x07, 0x01, 0x06, 0x06,
    0x55, 0x06, 0x4e, 0x00, 0x00, 0x00, 0x1e, 0x00, 0x1e, 0x24, 0x23, 0x23, 0x13, 0x23, 0x11, 0x08,
    0x0b, 0x1c, 0x2b, 0x13, 0x11, 0x33, 0x11, 0x14, 0x16, 0x33, 0x32, 0x36, 0x35, 0x11, 0x33, 0x11,
    0x14, 0x16, 0x33, 0x32, 0x37, 0x15, 0x06, 0x23, 0x22, 0x26, 0x27, 0x23, 0x06, 0x23, 0x22, 0x26,
    0x27, 0x11, 0x8c, 0xb5, 0x6b, 0x77, 0x80, 0x92, 0xb4, 0x24, 0x2a, 0x19, 0x1d, 0x41, 0x30, 0x5b,
    0x5f, 0x05, 0x03, 0x6a, 0xc1, 0x43, 0x6d, 0x1f, 0xfe, 0x57, 0x05, 0xe3, 0xfd, 0x52, 0x8a, 0x8b,
    0xae, 0xa2, 0x02, 0x73, 0xfc, 0xd0, 0x4c, 0x45, 0x08, 0x81, 0x14, 0x5e, 0x64, 0xc2, 0x29, 0x26,
    0xfe, 0x1c, 0x00, 0x02, 0x00, 0x1a, 0x02, 0x8b, 0x02, 0xfd, 0x05, 0x98, 0x00, 0x23, 0x00, 0x2d,
    0x00, 0x51, 0x40, 0x4e, 0x21, 0x1b, 0x02, 0x05, 0x08, 0x1c, 0x01, 0x00, 0x05, 0x02, 0x4c, 0x00,
    0x03, 0x02, 0x01, 0x02, 0x03, 0x01, 0x80, 0x00, 0x01, 0x00, 0x08, 0x05, 0x01, 0x08, 0x69, 0x0a,
    0x07, 0x02, 0x05, 0x06, 0x09, 0x02, 0x00, 0x05, 0x00, 0x65, 0x00, 0x02, 0x02, 0x04, 0x61, 0x00,
    0x04, 0x04, 0x70, 0x02, 0x4e, 0x25, 0x24, 0x01, 0x00, 0x2a, 0x28, 0x24, 0x2d, 0x25, 0x2d, 0x1f,
    0x1d, 0x19, 0x18, 0x13, 0x11, 0x0f, 0x0e, 0x0c, 0x0a, 0x07, 0x05, 0x00, 0x23, 0x01, 0x23, 0x0b,
    0x0d, 0x16, 0x2b, 0x01, 0x22, 0x26, 0x35, 0x34, 0x36, 0x37, 0x37, 0x35, 0x34, 0x26, 0x23, 0x22,
    0x06, 0x07, 0x27, 0x36, 0x36, 0x33, 0x32, 0x16, 0x15, 0x11, 0x14, 0x16, 0x33, 0x32, 0x37, 0x15,
    0x06, 0x23, 0x22, 0x26, 0x27, 0x23, 0x06, 0x27, 0x32, 0x36, 0x35, 0x35, 0x07, 0x06, 0x06, 0x15,
    0x14, 0x01, 0x04, 0x6c, 0x7e, 0x9d, 0x9b, 0xb2, 0x46, 0x51, 0x43, 0x51, 0x09, 0x95, 0x10, 0x9f,
    0x81, 0x91, 0x97, 0x1c, 0x23, 0x13, 0x18, 0x31, 0x22, 0x49, 0x51, 0x04, 0x04, 0x49, 0x94, 0x5a,
    0x7f, 0x8a, 0x76, 0x54, 0x02, 0x8b, 0x74, 0x67, 0x74, 0x7c, 0x02, 0x04, 0x3c, 0x51, 0x4a, 0x3b,
    0x4c, 0x0a, 0x6a, 0x78, 0x7d, 0x7d, 0xfe, 0xcc, 0x3a, 0x32, 0x08, 0x68, 0x0d, 0x4c, 0x41, 0x93,
    0x6f, 0x76, 0x4f, 0x41, 0x04, 0x06, 0x42, 0x41, 0x79, 0x00, 0x00, 0x02, 0x00, 0x1b, 0x02, 0x8b,
    0x02, 0xd3, 0x05, 0x98, 0x00, 0x0a, 0x00, 0x16, 0x00, 0x1c, 0x40, 0x19, 0x00, 0x03, 0x00, 0x00,
    0x03, 0x00, 0x65, 0x00, 0x02, 0x02, 0x01, 0x61, 0x00, 0x01, 0x01, 0x70, 0x02, 0x4e, 0x24, 0x23,
    0x24, 0x22, 0x04, 0x0d, 0x1a, 0x2b, 0x01, 0x14, 0x06, 0x23, 0x22, 0x26, 0x35, 0x34, 0x36, 0x33,
    0x20, 0x03, 0x34, 0x26, 0x23, 0x22, 0x06, 0x15, 0x14, 0x16, 0x33, 0x32, 0x36, 0x02, 0xd3, 0xb0,
    0xaf, 0xa8, 0xb1, 0xb2, 0xab, 0x01, 0x5b, 0x95, 0x5b, 0x68, 0x6c, 0x5c, 0x5b, 0x65, 0x6f, 0x5c,
    0x04, 0x12, 0xbc, 0xcb, 0xc9, 0xbe, 0xbd, 0xc9, 0xfe, 0x7a, 0x9a, 0x83, 0x87, 0x96, 0x91, 0x8d,
    0x8a, 0x00, 0x00, 0x03, 0x00, 0x42, 0xff, 0xec, 0x06, 0xc2, 0x04, 0x4e, 0x00, 0x27, 0x00, 0x34,
    0x00, 0x3b, 0x00, 0xbd, 0x40, 0x0e, 0x22, 0x1e, 0x1d, 0x03, 0x03, 0x04, 0x0c, 0x08, 0x07, 0x03,
    0x00, 0x07, 0x02, 0x4c, 0x4b, 0xb0, 0x0a, 0x50, 0x58, 0x40, 0x25, 0x0d, 0x0b, 0x02, 0x03, 0x08,
    0x0c, 0x02, 0x07, 0x00, 0x03, 0x07, 0x67, 0x0a, 0x01, 0x04, 0x04, 0x05, 0x61, 0x06, 0x01, 0x05,
    0x05, 0x59, 0x4d, 0x09, 0x01, 0x00, 0x00, 0x01, 0x61, 0x02, 0x01, 0x01, 0x01, 0x57, 0x01, 0x4e,
    0x1b, 0x4b, 0xb0, 0x21, 0x50, 0x58, 0x40, 0x2a, 0x00, 0x08, 0x07, 0x03, 0x08, 0x57, 0x0d, 0x0b,
    0x02, 0x03, 0x0c, 0x01, 0x07, 0x00, 0x03, 0x07, 0x67, 0x0a, 0x01, 0x04, 0x04, 0x05, 0x61, 0x06,
    0x01, 0x05, 0x05, 0x59, 0x4d, 0x09, 0x01, 0x00, 0x00, 0x01, 0x61, 0x02, 0x01, 0x01, 0x01, 0x57,
    0x01, 0x4e, 0x1b, 0x40, 0x2b, 0x00, 0x03, 0x00, 0x08, 0x07, 0x03, 0x08, 0x67, 0x0d, 0x01, 0x0b,
    0x0c, 0x01, 0x07, 0x00, 0x0b, 0x07, 0x67, 0x0a, 0x01, 0x04, 0x04, 0x05, 0x61, 0x06, 0x01, 0x05,
    0x05, 0x59, 0x4d, 0x09, 0x01, 0x00, 0x00, 0x01, 0x61, 0x02, 0x01, 0x01, 0x01, 0x57, 0x01, 0x4e,
    0x59, 0x59, 0x40, 0x1c, 0x35, 0x35, 0x00, 0x00, 0x35, 0x3b, 0x35, 0x3b, 0x39, 0x37, 0x31, 0x2f,
    0x2a, 0x28, 0x00, 0x27, 0x00, 0x27, 0x22, 0x24, 0x23, 0x24, 0x23, 0x24, 0x23, 0x0e, 0x0b, 0x1d,
    0x2b, 0x01, 0x15, 0x16, 0x16, 0x33, 0x32, 0x36, 0x37, 0x17, 0x02, 0x21, 0x20, 0x03, 0x06, 0x06,
    0x23, 0x22, 0x26, 0x35, 0x34, 0x36, 0x37, 0x37, 0x35, 0x34, 0x26, 0x23, 0x22, 0x06, 0x07, 0x27,
    0x12, 0x21, 0x32, 0x17, 0x36, 0x33, 0x20, 0x11, 0x15, 0x25, 0x07, 0x0e, 0x02, 0x15, 0x14, 0x16,
    0x33, 0x32, 0x36, 0x36, 0x35, 0x25, 0x26, 0x26, 0x23, 0x22, 0x06, 0x07, 0x03, 0xc8, 0x02, 0x96,
    0x8c, 0x75, 0x8d, 0x19, 0x9e, 0x61, 0xfe, 0xa8, 0xfe, 0xbf, 0x66, 0x4f, 0xd2, 0x92, 0xa7, 0xa9,
    0xee, 0xf2, 0xf0, 0x6f, 0x79, 0x7e, 0x71, 0x0d, 0xbc, 0x2e, 0x01, 0x8e, 0xfa, 0x63, 0x76, 0xe4,
    0x01, 0xdd, 0xfc, 0x50, 0xc3, 0x85, 0x8d, 0x42, 0x64, 0x5d, 0x66, 0x99, 0x57, 0x02, 0xf6, 0x0f,
    0x90, 0x87, 0x7f, 0x93, 0x06, 0x01, 0xf7, 0x11, 0xb5, 0xbe, 0x5e, 0x48, 0x2d, 0xff, 0x00, 0x01,
    0x01, 0x8c, 0x75, 0xac, 0x96, 0xae, 0xb0, 0x04, 0x04, 0x3b, 0x87, 0x6f, 0x50, 0x5c, 0x11, 0x01,
    0x24, 0x8b, 0x8b, 0xfd, 0xc1, 0x18, 0x1f, 0x04, 0x03, 0x35, 0x65, 0x4a, 0x57, 0x61, 0x59, 0x9b,
    0x56, 0xc4, 0xab, 0x9d, 0xab, 0x9d, 0x00, 0x03, 0x00, 0x2c, 0xff, 0xda, 0x04, 0xb4, 0x04, 0x5c,
    0x00, 0x12, 0x00, 0x1a, 0x00, 0x22, 0x00, 0x86, 0x40, 0x13, 0x0e, 0x01, 0x05, 0x02, 0x1e, 0x1d,
    0x16, 0x15, 0x11, 0x08, 0x06, 0x04, 0x05, 0x05, 0x01, 0x00, 0x04, 0x03, 0x4c, 0x4b, 0xb0, 0x1b,
    0x50, 0x58, 0x40, 0x17, 0x00, 0x05, 0x05, 0x02, 0x61, 0x03, 0x01, 0x02, 0x02, 0x59, 0x4d, 0x00,
    0x04, 0x04, 0x00, 0x61, 0x01, 0x01, 0x00, 0x00, 0x57, 0x00, 0x4e, 0x1b, 0x4b, 0xb0, 0x23, 0x50,
    0x58, 0x40, 0x1b, 0x00, 0x01, 0x00, 0x01, 0x86, 0x00, 0x05, 0x05, 0x02, 0x61, 0x03, 0x01, 0x02,
    0x02, 0x59, 0x4d, 0x00, 0x04, 0x04, 0x00, 0x61, 0x00, 0x00, 0x00, 0x57, 0x00, 0x4e, 0x1b, 0x40,
    0x1f, 0x00, 0x03, 0x02, 0x03, 0x85, 0x00, 0x01, 0x00, 0x01, 0x86, 0x00, 0x05, 0x05, 0x02, 0x61,
    0x00, 0x02, 0x02, 0x59, 0x4d, 0x00, 0x04, 0x04, 0x00, 0x61, 0x00, 0x00, 0x00, 0x57, 0x00, 0x4e,
    0x59, 0x59, 0x40, 0x09, 0x26, 0x27, 0x12, 0x24, 0x12, 0x22, 0x06, 0x0b, 0x1c, 0x2b, 0x01, 0x10,
    0x02, 0x23, 0x22, 0x27, 0x07, 0x23, 0x37, 0x26, 0x35, 0x10, 0x21, 0x32, 0x17, 0x37, 0x33, 0x07,
    0x16, 0x07, 0x34, 0x27, 0x01, 0x16, 0x33, 0x32, 0x36, 0x25, 0x14, 0x17, 0x01, 0x26, 0x23, 0x22,
    0x06, 0x04, 0x58, 0xfa, 0xee, 0xc3, 0x76, 0x64, 0xa7, 0xb8, 0x53, 0x01, 0xe5, 0xc9, 0x73, 0x5b,
    0xa7, 0xad, 0x51, 0xbd, 0x17, 0xfe, 0x1d, 0x44, 0x89, 0xa2, 0x8b, 0xfd, 0xb3, 0x18, 0x01, 0xe2,
    0x43, 0x8c, 0x9e, 0x8d, 0x02, 0x1e, 0xfe, 0xe4, 0xfe, 0xea, 0x62, 0x74, 0xd6, 0x8a, 0xe4, 0x02,
    0x30, 0x5b, 0x69, 0xc9, 0x85, 0xf0, 0x81, 0x5c, 0xfd, 0xce, 0x58, 0xd0, 0xdd, 0x82, 0x55, 0x02,
    0x31, 0x51, 0xcf, 0x00, 0x00, 0x02, 0x00, 0x83, 0xfe, 0xa4, 0x04, 0x56, 0x04, 0x3a, 0x00, 0x1d,
    0x00, 0x21, 0x00, 0x33, 0x40, 0x30, 0x00, 0x00, 0x04, 0x02, 0x04, 0x00, 0x02, 0x80, 0x00, 0x02,
    0x01, 0x04, 0x02, 0x01, 0x7e, 0x00, 0x01, 0x00, 0x03, 0x01, 0x03, 0x66, 0x00, 0x04, 0x04, 0x05,
    0x5f, 0x06, 0x01, 0x05, 0x05, 0x53, 0x04, 0x4e, 0x1e, 0x1e, 0x1e, 0x21, 0x1e, 0x21, 0x13, 0x22,
    0x12, 0x1b, 0x18, 0x07, 0x0b, 0x1b, 0x2b, 0x37, 0x34, 0x36, 0x36, 0x37, 0x37, 0x36, 0x36, 0x37,
    0x33, 0x0e, 0x07, 0x15, 0x14, 0x16, 0x20, 0x36, 0x37, 0x17, 0x06, 0x04, 0x23, 0x22, 0x24, 0x01,
    0x15, 0x23, 0x35, 0x83, 0x2c, 0x52, 0x5d, 0x51, 0x47, 0x46, 0x01, 0xaf, 0x02, 0x27, 0x3e, 0x4e,
    0x50, 0x4d, 0x3c, 0x25, 0x9b, 0x01, 0x18, 0xa4, 0x0e, 0xb8, 0x1a, 0xfe, 0xfc, 0xd6, 0xdf, 0xff,
    0x00, 0x02, 0x71, 0xc3, 0x32, 0x4b, 0x76, 0x64, 0x44, 0x3b, 0x34, 0x73, 0x44, 0x45, 0x68, 0x50,
    0x3f, 0x39, 0x39, 0x46, 0x58, 0x3b, 0x72, 0x84, 0x8c, 0x7a, 0x0c, 0xc6, 0xd4, 0xd3, 0x04, 0xc3,
    0xc9, 0xc9, 0x00, 0x02, 0x00, 0xf2, 0xfe, 0xb9, 0x01, 0xb8, 0x04, 0x3a, 0x00, 0x03, 0x00, 0x07,
    0x00, 0x22, 0x40, 0x1f, 0x00, 0x00, 0x00, 0x01, 0x00, 0x01, 0x63, 0x00, 0x02, 0x02, 0x03, 0x5f,
    0x04, 0x01, 0x03, 0x03, 0x53, 0x02, 0x4e, 0x04, 0x04, 0x04, 0x07, 0x04, 0x07, 0x12, 0x11, 0x10,
    0x05, 0x0b, 0x19, 0x2b, 0x01, 0x33, 0x13, 0x23, 0x13, 0x15, 0x23, 0x35, 0x01, 0x0a, 0x94, 0x18,
    0xc4, 0xc6, 0xc2, 0x02, 0xad, 0xfc, 0x0c, 0x05, 0x81, 0xc9, 0xc9, 0x00, 0x00, 0x01, 0x00, 0x64,
    0x00, 0xb4, 0x04, 0x47, 0x02, 0xf2, 0x00, 0x05, 0x00, 0x24, 0x40, 0x21, 0x03, 0x01, 0x02, 0x00,
    0x02, 0x86, 0x00, 0x01, 0x00, 0x00, 0x01, 0x57, 0x00, 0x01, 0x01, 0x00, 0x5f, 0x00, 0x00, 0x01,
    0x00, 0x4f, 0x00, 0x00, 0x00, 0x05, 0x00, 0x05, 0x11, 0x11, 0x04, 0x0b, 0x18, 0x2b, 0x25, 0x11,
    0x21, 0x35, 0x21, 0x11, 0x03, 0xb6, 0xfc, 0xae, 0x03, 0xe3, 0xb4, 0x01, 0xac, 0x92, 0xfd, 0xc2,
    0x00, 0x02, 0x00, 0x53, 0x00, 0x8d, 0x04, 0x20, 0x03, 0xac, 0x00, 0x08, 0x00, 0x11, 0x00, 0x39,
    0x40, 0x36, 0x10, 0x0f, 0x0e, 0x0b, 0x0a, 0x07, 0x06, 0x05, 0x02, 0x01, 0x0a, 0x01, 0x00, 0x01,
    0x4c, 0x02, 0x01, 0x00, 0x01, 0x01, 0x00, 0x57, 0x02, 0x01, 0x00, 0x00, 0x01, 0x5f, 0x05, 0x03,
    0x04, 0x03, 0x01, 0x00, 0x01, 0x4f, 0x09, 0x09, 0x00, 0x00, 0x09, 0x11, 0x09, 0x11, 0x0d, 0x0c,
    0x00, 0x08, 0x00, 0x08, 0x13, 0x06, 0x0b, 0x17, 0x2b, 0x25, 0x01, 0x35, 0x01, 0x33, 0x15, 0x01,
    0x01, 0x15, 0x21, 0x01, 0x35, 0x01, 0x33, 0x15, 0x01, 0x01, 0x15, 0x03, 0x76, 0xfe, 0xae, 0x01,
    0x52, 0xa8, 0xfe, 0xae, 0x01, 0x54, 0xfd, 0x83, 0xfe, 0xb0, 0x01, 0x50, 0xa7, 0xfe, 0xb1, 0x01,
    0x51, 0x8d, 0x01, 0x6d, 0x3f, 0x01, 0x73, 0x1f, 0xfe, 0x8c, 0xfe, 0x91, 0x1d, 0x01, 0x6d, 0x3f,
    0x01, 0x73, 0x1f, 0xfe, 0x8c, 0xfe, 0x91, 0x1d, 0x00, 0x02, 0x00, 0x53, 0x00, 0x8d, 0x04, 0x20,
    0x03, 0xac, 0x00, 0x08, 0x00, 0x11, 0x00, 0x2c, 0x40, 0x29, 0x11, 0x10, 0x0d, 0x0c, 0x0b, 0x08,
    0x07, 0x04, 0x03, 0x02, 0x0a, 0x00, 0x01, 0x01, 0x4c, 0x03, 0x01, 0x01, 0x00, 0x00, 0x01, 0x57,
    0x03, 0x01, 0x01, 0x01, 0x00, 0x5f, 0x02, 0x01, 0x00, 0x01, 0x00, 0x4f, 0x14, 0x13, 0x14, 0x10,
    0x04, 0x0b, 0x1a, 0x2b, 0x37, 0x23, 0x35, 0x01, 0x01, 0x35, 0x33, 0x01, 0x15, 0x13, 0x23, 0x35,
    0x01, 0x01, 0x35, 0x33, 0x01, 0x15, 0xfd, 0xaa, 0x01, 0x52, 0xfe, 0xb0, 0xa8, 0x01, 0x4f, 0x82,
    0xa8, 0x01, 0x52, 0xfe, 0xb0, 0xa6, 0x01, 0x52, 0x8d, 0x1d, 0x01, 0x6f, 0x01, 0x74, 0x1f, 0xfe,
    0x8d, 0x3f, 0xfe, 0x93, 0x1d, 0x01, 0x6f, 0x01, 0x74, 0x1f, 0xfe, 0x8d, 0x3f, 0x00, 0xff, 0xff,
    0x00, 0x04, 0x00, 0x00, 0x05, 0x52, 0x06, 0xf0, 0x02, 0x26, 0x00, 0x22, 0x00, 0x00, 0x00, 0x07,
    0x00, 0xc5, 0x01, 0x4e, 0x00, 0x00, 0xff, 0xff, 0x00, 0x04, 0x00, 0x00, 0x05, 0x52, 0x07, 0x06,
    0x02, 0x26, 0x00, 0x22, 0x00, 0x00, 0x00, 0x07, 0x00, 0xc9, 0x01, 0x5e, 0x00, 0x00, 0xff, 0xff,
    0x00, 0x61, 0xff, 0xec, 0x05, 0xd7, 0x07, 0x06, 0x02, 0x26, 0x00, 0x30, 0x00, 0x00, 0x00, 0x07,
    0x00, 0xc9, 0x01, 0xc1, 0x00, 0x00, 0x00, 0x03, 0x00, 0x41, 0x00, 0xdf, 0x04, 0x24, 0x04, 0x75,
    0x00, 0x03, 0x00, 0x07, 0x00, 0x0b, 0x00, 0x40, 0x40, 0x3d, 0x00, 0x04, 0x08, 0x01, 0x05, 0x00,
    0x04, 0x05, 0x67, 0x00, 0x00, 0x06, 0x01, 0x01, 0x02, 0x00, 0x01, 0x67, 0x00, 0x02, 0x03, 0x03,
    0x02, 0x57, 0x00, 0x02, 0x02, 0x03, 0x5f, 0x07, 0x01, 0x03, 0x02, 0x03, 0x4f, 0x08, 0x08, 0x04,
    0x04, 0x00, 0x00, 0x08, 0x0b, 0x08, 0x0b, 0x0a, 0x09, 0x04, 0x07, 0x04, 0x07, 0x06, 0x05, 0x00,
    0x03, 0x00, 0x03, 0x11, 0x09, 0x0b, 0x17, 0x2b, 0x13, 0x35, 0x21, 0x15, 0x01, 0x35, 0x33, 0x15,
    0x03, 0x35, 0x33, 0x15, 0x41, 0x03, 0xe3, 0xfd, 0xba, 0xa8, 0xa8, 0xa8, 0x02, 0x60, 0x92, 0x92,
    0xfe, 0x7f, 0xb7, 0xb7, 0x02, 0xdf, 0xb7, 0xb7, 0xff, 0xff, 0x00, 0x05, 0xfe, 0x57, 0x03, 0xfc,
    0x05, 0x7b, 0x02, 0x26, 0x00, 0x5a, 0x00, 0x00, 0x00, 0x07, 0x00, 0x89, 0x00, 0xbb, 0x00, 0x00,
    0x00, 0x01, 0xfe, 0x60, 0x00, 0x00, 0x02, 0x62, 0x05, 0x81, 0x00, 0x03, 0x00, 0x13, 0x40, 0x10,
    0x00, 0x01, 0x01, 0x50, 0x4d, 0x00, 0x00, 0x00, 0x51, 0x00, 0x4e, 0x11, 0x10, 0x02, 0x0b, 0x18,
    0x2b, 0x21, 0x23, 0x01, 0x33, 0xfe, 0xf4, 0x94, 0x03, 0x71, 0x91, 0x05, 0x81, 0x00, 0x00, 0x01,
    0x00, 0xbb, 0x01, 0xbe, 0x01, 0x7e, 0x02, 0x9a, 0x00, 0x03, 0x00, 0x1e, 0x40, 0x1b, 0x00, 0x00,
    0x01, 0x01, 0x00, 0x57, 0x00, 0x00, 0x00, 0x01, 0x5f, 0x02, 0x01, 0x01, 0x00, 0x01, 0x4f, 0x00,
    0x00, 0x00, 0x03, 0x00, 0x03, 0x11, 0x03, 0x0b, 0x17, 0x2b, 0x13, 0x35, 0x33, 0x15, 0xbb, 0xc3,
    0x01, 0xbe, 0xdc, 0xdc, 0xff, 0xff, 0x00, 0x04, 0x00, 0x00, 0x05, 0x52, 0x06, 0xfe, 0x02, 0x26,
    0x00, 0x22, 0x00, 0x00, 0x00, 0x07, 0x00, 0xc7, 0x01, 0x60, 0x00, 0x00, 0xff, 0xff, 0x00, 0xa8,
    0x00, 0x00, 0x04, 0xfe, 0x06, 0xfe, 0x02, 0x26, 0x00, 0x26, 0x00, 0x00, 0x00, 0x07, 0x00, 0xc7,
    0x01, 0x77, 0x00, 0x00, 0xff, 0xff, 0x00, 0x04, 0x00, 0x00, 0x05, 0x52, 0x06, 0xf0, 0x02, 0x26,
    0x00, 0x22, 0x00, 0x00, 0x00, 0x07, 0x00, 0xc6, 0x01, 0xdb, 0x00, 0x00, 0xff, 0xff, 0x00, 0xa8,
    0x00, 0x00, 0x04, 0xfe, 0x06, 0xb2, 0x02, 0x26, 0x00, 0x26, 0x00, 0x00, 0x00, 0x07, 0x00, 0xc8,
    0x01, 0x79, 0x00, 0x00, 0xff, 0xff, 0x00, 0xa8, 0x00, 0x00, 0x04, 0xfe, 0x06, 0xf0, 0x02, 0x26,
    0x00, 0x26, 0x00, 0x00, 0x00, 0x07, 0x00, 0xc5, 0x01, 0x3f, 0x00, 0x00, 0xff, 0xff, 0x00, 0x8e,
    0x00, 0x00, 0x02, 0x36, 0x06, 0xf0, 0x02, 0x26, 0x00, 0x2a, 0x00, 0x00, 0x00, 0x06, 0x00, 0xc6,
    0x46, 0x00, 0xff, 0xff, 0xff, 0xd2, 0x00, 0x00, 0x02, 0x68, 0x06, 0xfe, 0x02, 0x26, 0x00, 0x2a,
    0x00, 0x00, 0x00, 0x06, 0x00, 0xc7, 0xd2, 0x00, 0xff, 0xff, 0x00, 0x07, 0x00, 0x00, 0x02, 0x34,
    0x06, 0xb2, 0x02, 0x26, 0x00, 0x2a, 0x00, 0x00, 0x00, 0x06, 0x00, 0xc8, 0xda, 0x00, 0xff, 0xff,
    0x00, 0x09, 0x00, 0x00, 0x01, 0xb1, 0x06, 0xf0, 0x02, 0x26, 0x00, 0x2a, 0x00, 0x00, 0x00, 0x06,
    0x00, 0xc5, 0x9f, 0x00, 0xff, 0xff, 0x00, 0x61, 0xff, 0xec, 0x05, 0xd7, 0x06, 0xf0, 0x02, 0x26,
    0x00, 0x30, 0x00, 0x00, 0x00, 0x07, 0x00, 0xc6, 0x02, 0x25, 0x00, 0x00, 0xff, 0xff, 0x00, 0x61,
    0xff, 0xec, 0x05, 0xd7, 0x06, 0xfe, 0x02, 0x26, 0x00, 0x30, 0x00, 0x00, 0x00, 0x07, 0x00, 0xc7,
    0x01, 0xd5, 0x00, 0x00, 0xff, 0xff, 0x00, 0x61, 0xff, 0xec, 0x05, 0xd7, 0x06, 0xf0, 0x02, 0x26,
    0x00, 0x30, 0x00, 0x00, 0x00, 0x07, 0x00, 0xc5, 0x01, 0xb6, 0x00, 0x00, 0xff, 0xff, 0x00, 0x9e,
    0xff, 0xec, 0x05, 0x29, 0x06, 0xf0, 0x02, 0x26, 0x00, 0x36, 0x00, 0x00, 0x00, 0x07, 0x00, 0xc6,
    0x01, 0xed, 0x00, 0x00, 0xff, 0xff, 0x00, 0x9e, 0xff, 0xec, 0x05, 0x29, 0x06, 0xfe, 0x02, 0x26,
    0x00, 0x36, 0x00, 0x00, 0x00, 0x07, 0x00, 0xc7, 0x01, 0x98, 0x00, 0x00, 0xff, 0xff, 0x00, 0x9e,
    0xff, 0xec, 0x05, 0x29, 0x06, 0xf0, 0x02, 0x26, 0x00, 0x36, 0x00, 0x00, 0x00, 0x07, 0x00, 0xc5,
    0x01, 0x8d, 0x00, 0x00, 0x00, 0x01, 0x00, 0xc2, 0x00, 0x00, 0x01, 0x76, 0x04, 0x3a, 0x00, 0x03,
    0x00, 0x19, 0x40, 0x16, 0x00, 0x00, 0x00, 0x53, 0x4d, 0x02, 0x01, 0x01, 0x01, 0x51, 0x01, 0x4e,
    0x00, 0x00, 0x00, 0x03, 0x00, 0x03, 0x11, 0x03, 0x0b, 0x17, 0x2b, 0x33, 0x11, 0x33, 0x11, 0xc2,
    0xb4, 0x04, 0x3a, 0xfb, 0xc6, 0x00, 0x00, 0x01, 0x00, 0x00, 0x04, 0xb1, 0x02, 0x96, 0x05, 0xd3,
    0x00, 0x09, 0x00, 0x23, 0xb1, 0x06, 0x64, 0x44, 0x40, 0x18, 0x07, 0x03, 0x00, 0x03, 0x00, 0x02,
    0x01, 0x4c, 0x00, 0x02, 0x00, 0x02, 0x85, 0x01, 0x01, 0x00, 0x00, 0x76, 0x12, 0x13, 0x11, 0x03,
    0x0b, 0x19, 0x2b, 0xb1, 0x06, 0x00, 0x44, 0x01, 0x15, 0x23, 0x27, 0x23, 0x07, 0x23, 0x35, 0x13,
    0x33, 0x02, 0x96, 0x69, 0xdb, 0x02, 0xe8, 0x68, 0xea, 0xcc, 0x04, 0xc5, 0x14, 0xa9, 0xa9, 0x14,
    0x01, 0x0e, 0x00, 0x01, 0xff, 0xe9, 0x04, 0xb1, 0x02, 0xb6, 0x05, 0xbd, 0x00, 0x17, 0x00, 0x39,
    0xb1, 0x06, 0x64, 0x44, 0x40, 0x2e, 0x00, 0x04, 0x01, 0x00, 0x04, 0x59, 0x05, 0x01, 0x03, 0x00,
    0x01, 0x00, 0x03, 0x01, 0x69, 0x00, 0x04, 0x04, 0x00, 0x61, 0x02, 0x06, 0x02, 0x00, 0x04, 0x00,
    0x51, 0x01, 0x00, 0x15, 0x14, 0x13, 0x11, 0x0e, 0x0c, 0x09, 0x08, 0x06, 0x04, 0x00, 0x17, 0x01,
    0x17, 0x07, 0x0b, 0x16, 0x2b, 0xb1, 0x06, 0x00, 0x44, 0x01, 0x22, 0x2e, 0x02, 0x23, 0x22, 0x06,
    0x07, 0x23, 0x3e, 0x02, 0x33, 0x32, 0x1e, 0x02, 0x33, 0x32, 0x37, 0x33, 0x06, 0x06, 0x01, 0xec,
    0x2a, 0x54, 0x4e, 0x47, 0x1f, 0x37, 0x36, 0x09, 0x5b, 0x0b, 0x30, 0x51, 0x3f, 0x2c, 0x54, 0x4e,
    0x45, 0x1e, 0x64, 0x11, 0x5c, 0x11, 0x64, 0x04, 0xb1, 0x25, 0x2d, 0x25, 0x3e, 0x39, 0x66, 0x69,
    0x3d, 0x25, 0x2d, 0x25, 0x77, 0x94, 0x78, 0x00, 0x00, 0x02, 0x00, 0x33, 0x04, 0x90, 0x02, 0x17,
    0x06, 0x73, 0x00, 0x0a, 0x00, 0x16, 0x00, 0x2a, 0xb1, 0x06, 0x64, 0x44, 0x40, 0x1f, 0x00, 0x01,
    0x00, 0x02, 0x03, 0x01, 0x02, 0x69, 0x00, 0x03, 0x00, 0x00, 0x03, 0x59, 0x00, 0x03, 0x03, 0x00,
    0x61, 0x00, 0x00, 0x03, 0x00, 0x51, 0x24, 0x24, 0x24, 0x12, 0x04, 0x0b, 0x1a, 0x2b, 0xb1, 0x06,
    0x00, 0x44, 0x01, 0x14, 0x06, 0x22, 0x26, 0x35, 0x34, 0x36, 0x33, 0x32, 0x16, 0x07, 0x34, 0x26,
    0x23, 0x22, 0x06, 0x15, 0x14, 0x16, 0x33, 0x32, 0x36, 0x02, 0x17, 0x8e, 0xc8, 0x8e, 0x8e, 0x64,
    0x63, 0x8f, 0x6c, 0x4e, 0x38, 0x39, 0x4e, 0x4c, 0x3b, 0x3a, 0x4c, 0x05, 0x82, 0x64, 0x8e, 0x8e,
    0x64, 0x65, 0x8c, 0x8d, 0x64, 0x38, 0x4e, 0x4e, 0x38, 0x37, 0x52, 0x51, 0x00, 0x01, 0x00, 0x77,
    0xfe, 0x4e, 0x01, 0xe3, 0x00, 0x00, 0x00, 0x12, 0x00, 0x68, 0xb1, 0x06, 0x64, 0x44, 0x40, 0x0a,
    0x05, 0x01, 0x01, 0x02, 0x04, 0x01, 0x00, 0x01, 0x02, 0x4c, 0x4b, 0xb0, 0x19, 0x50, 0x58, 0x40,
    0x1f, 0x00, 0x04, 0x03, 0x02, 0x03, 0x04, 0x72, 0x00, 0x03, 0x00, 0x02, 0x01, 0x03, 0x02, 0x69,
    0x00, 0x01, 0x00, 0x00, 0x01, 0x59, 0x00, 0x01, 0x01, 0x00, 0x61, 0x00, 0x00, 0x01, 0x00, 0x51,
    0x1b, 0x40, 0x20, 0x00, 0x04, 0x03, 0x02, 0x03, 0x04, 0x02, 0x80, 0x00, 0x03, 0x00, 0x02, 0x01,
    0x03, 0x02, 0x69, 0x00, 0x01, 0x00, 0x00, 0x01, 0x59, 0x00, 0x01, 0x01, 0x00, 0x61, 0x00, 0x00,
    0x01, 0x00, 0x51, 0x59, 0xb7, 0x11, 0x12, 0x22, 0x23, 0x21, 0x05, 0x0b, 0x1b, 0x2b, 0xb1, 0x06,
    0x00, 0x44, 0x05, 0x14, 0x21, 0x22, 0x27, 0x35, 0x16, 0x33, 0x32, 0x35, 0x34, 0x23, 0x22, 0x07,
    0x37, 0x33, 0x07, 0x16, 0x16, 0x01, 0xe3, 0xfe, 0xee, 0x39, 0x21, 0x31, 0x25, 0x93, 0x85, 0x2b,
    0x0e, 0x41, 0x6b, 0x27, 0x5e, 0x5e, 0xfd, 0xb5, 0x04, 0x62, 0x06, 0x51, 0x4d, 0x02, 0xb6, 0x64,
    0x03, 0x51, 0x00, 0x02, 0x00, 0xb7, 0xfe, 0x4e, 0x01, 0x5d, 0x05, 0xcc, 0x00, 0x03, 0x00, 0x07,
    0x00, 0x2c, 0x40, 0x29, 0x05, 0x01, 0x03, 0x03, 0x02, 0x5f, 0x00, 0x02, 0x02, 0x52, 0x4d, 0x00,
    0x00, 0x00, 0x01, 0x5f, 0x04, 0x01, 0x01, 0x01, 0x55, 0x01, 0x4e, 0x04, 0x04, 0x00, 0x00, 0x04,
    0x07, 0x04, 0x07, 0x06, 0x05, 0x00, 0x03, 0x00, 0x03, 0x11, 0x06, 0x0b, 0x17, 0x2b, 0x13, 0x11,
    0x33, 0x11, 0x03, 0x11, 0x33, 0x11, 0xb7, 0xa6, 0xa6, 0xa6, 0xfe, 0x4e, 0x03, 0x0b, 0xfc, 0xf5,
    0x04, 0x74, 0x03, 0x0a, 0xfc, 0xf6, 0x00, 0x02, 0x00, 0x0e, 0x00, 0x00, 0x05, 0x65, 0x05, 0x81,
    0x00, 0x0d, 0x00, 0x1b, 0x00, 0x2d, 0x40, 0x2a, 0x05, 0x01, 0x00, 0x06, 0x01, 0x03, 0x07, 0x00,
    0x03, 0x67, 0x00, 0x04, 0x04, 0x01, 0x5f, 0x00, 0x01, 0x01, 0x50, 0x4d, 0x00, 0x07, 0x07, 0x02,
    0x5f, 0x00, 0x02, 0x02, 0x51, 0x02, 0x4e, 0x21, 0x11, 0x11, 0x23, 0x11, 0x25, 0x21, 0x10, 0x08,
    0x0b, 0x1e, 0x2b, 0x13, 0x33, 0x11, 0x21, 0x20, 0x00, 0x11, 0x14, 0x02, 0x04, 0x23, 0x21, 0x11,
    0x23, 0x25, 0x10, 0x00, 0x21, 0x21, 0x11, 0x21, 0x15, 0x21, 0x11, 0x21, 0x32, 0x36, 0x12, 0x0e,
    0x9a, 0x01, 0xd2, 0x01, 0x66, 0x01, 0x85, 0xaa, 0xfe, 0xc8, 0xcc, 0xfd, 0xf1, 0x9a, 0x04, 0x97,
    0xfe, 0xe1, 0xfe, 0xf0, 0xfe, 0xf1, 0x01, 0x96, 0xfe, 0x6a, 0x01, 0x3a, 0x9b, 0xeb, 0x7e, 0x03,
    0x21, 0x02, 0x60, 0xfe, 0x99, 0xfe, 0xb5, 0xda, 0xfe, 0xb9, 0xae, 0x02, 0x87, 0x48, 0x01, 0x06,
    0x01, 0x13, 0xfe, 0x39, 0x9a, 0xfe, 0x12, 0x88, 0x01, 0x00, 0x00, 0x02, 0x00, 0x56, 0xff, 0xec,
    0x04, 0x27, 0x05, 0xea, 0x00, 0x1b, 0x00, 0x27, 0x00, 0x41, 0x40, 0x3e, 0x15, 0x14, 0x12, 0x0d,
    0x0c, 0x0b, 0x0a, 0x07, 0x01, 0x02, 0x08, 0x01, 0x03, 0x01, 0x02, 0x4c, 0x13, 0x01, 0x02, 0x4a,
    0x00, 0x01, 0x00, 0x03, 0x04, 0x01, 0x03, 0x6a, 0x00, 0x02, 0x02, 0x52, 0x4d, 0x00, 0x04, 0x04,
    0x00, 0x61, 0x05, 0x01, 0x00, 0x00, 0x57, 0x00, 0x4e, 0x01, 0x00, 0x26, 0x24, 0x20, 0x1e, 0x10,
    0x0f, 0x07, 0x05, 0x00, 0x1b, 0x01, 0x1b, 0x06, 0x0b, 0x16, 0x2b, 0x05, 0x22, 0x02, 0x35, 0x34,
    0x36, 0x33, 0x32, 0x17, 0x26, 0x27, 0x05, 0x35, 0x37, 0x26, 0x27, 0x33, 0x16, 0x17, 0x25, 0x07,
    0x07, 0x16, 0x12, 0x15, 0x15, 0x10, 0x02, 0x13, 0x34, 0x26, 0x23, 0x22, 0x06, 0x15, 0x14, 0x16,
    0x33, 0x32, 0x36, 0x02, 0x36, 0xe8, 0xf8, 0xf8, 0xef, 0x89, 0x5e, 0x6d, 0x7d, 0xfe, 0xd3, 0xda,
    0x6d, 0x85, 0xd1, 0x50, 0x5a, 0x01, 0x32, 0x01, 0xd3, 0xab, 0xae, 0xf9, 0x3c, 0x8d, 0x9c, 0x9d,
    0x91, 0x90, 0x91, 0xa1, 0x95, 0x14, 0x01, 0x02, 0xf3, 0xf4, 0xfe, 0x3b, 0xd9, 0x72, 0x85, 0x72,
    0x5e, 0x57, 0x47, 0x24, 0x42, 0x84, 0x70, 0x5c, 0x9c, 0xfe, 0x6a, 0xe8, 0x06, 0xfe, 0xfb, 0xfe,
    0xf3, 0x01, 0xf5, 0xc0, 0xad, 0xae, 0xbf, 0xbe, 0xb2, 0xaf, 0xff, 0xff, 0x00, 0x2d, 0x00, 0x00,
    0x05, 0x29, 0x06, 0xf0, 0x02, 0x26, 0x00, 0x3a, 0x00, 0x00, 0x00, 0x07, 0x00, 0xc6, 0x01, 0xd0,
    0x00, 0x00, 0xff, 0xff, 0x00, 0x05, 0xfe, 0x57, 0x03, 0xfc, 0x05, 0xe4, 0x02, 0x26, 0x00, 0x5a,
    0x00, 0x00, 0x00, 0x07, 0x00, 0x88, 0x01, 0x1b, 0x00, 0x00, 0x00, 0x02, 0x00, 0xa8, 0x00, 0x00,
    0x04, 0xea, 0x05, 0x81, 0x00, 0x0d, 0x00, 0x16, 0x00, 0x27, 0x40, 0x24, 0x00, 0x03, 0x00, 0x04,
    0x05, 0x03, 0x04, 0x67, 0x00, 0x05, 0x00, 0x00, 0x01, 0x05, 0x00, 0x67, 0x00, 0x02, 0x02, 0x50,
    0x4d, 0x00, 0x01, 0x01, 0x51, 0x01, 0x4e, 0x21, 0x24, 0x21, 0x11, 0x11, 0x23, 0x06, 0x0b, 0x1c,
    0x2b, 0x01, 0x14, 0x06, 0x06, 0x23, 0x21, 0x11, 0x23, 0x11, 0x33, 0x15, 0x21, 0x32, 0x04, 0x07,
    0x34, 0x26, 0x23, 0x21, 0x11, 0x21, 0x32, 0x36, 0x04, 0xea, 0x74, 0xdb, 0x96, 0xfe, 0x62, 0xbf,
    0xbf, 0x01, 0x92, 0xef, 0x01, 0x02, 0xc0, 0xa4, 0xa4, 0xfe, 0x85, 0x01, 0x83, 0x99, 0xa7, 0x02,
    0xdf, 0x80, 0xc7, 0x6f, 0xfe, 0xd7, 0x05, 0x81, 0xfc, 0xde, 0xcc, 0x86, 0x95, 0xfd, 0xc0, 0x9b,
    0x00, 0x02, 0x00, 0x8a, 0xfe, 0x57, 0x04, 0x1d, 0x05, 0xcc, 0x00, 0x14, 0x00, 0x21, 0x00, 0x32,
    0x40, 0x2f, 0x0f, 0x04, 0x02, 0x05, 0x04, 0x01, 0x4c, 0x00, 0x00, 0x00, 0x52, 0x4d, 0x00, 0x04,
    0x04, 0x01, 0x61, 0x00, 0x01, 0x01, 0x59, 0x4d, 0x00, 0x05, 0x05, 0x02, 0x61, 0x00, 0x02, 0x02,
    0x57, 0x4d, 0x00, 0x03, 0x03, 0x55, 0x03, 0x4e, 0x25, 0x23, 0x15, 0x23, 0x26, 0x10, 0x06, 0x0b,
    0x1c, 0x2b, 0x13, 0x33, 0x11, 0x14, 0x07, 0x33, 0x36, 0x36, 0x33, 0x32, 0x12, 0x11, 0x10, 0x21,
    0x22, 0x27, 0x23, 0x16, 0x15, 0x11, 0x23, 0x01, 0x34, 0x26, 0x23, 0x22, 0x06, 0x06, 0x15, 0x14,
    0x16, 0x33, 0x32, 0x36, 0x8a, 0xb4, 0x04, 0x06, 0x30, 0x9e, 0x81, 0xc8, 0xc6, 0xfe, 0x72, 0xfa,
    0x56, 0x05, 0x04, 0xb4, 0x02, 0xd6, 0x7a, 0x85, 0x6b, 0x79, 0x3f, 0x88, 0x99, 0x86, 0x7b, 0x05,
    0xcc, 0xfe, 0x59, 0x41, 0x58, 0x64, 0x5d, 0xfe, 0xf4, 0xfe, 0xe1, 0xfd, 0xca, 0xbc, 0x08, 0xa2,
    0xfe, 0x59, 0x03, 0xc7, 0xe2, 0xc2, 0x5a, 0xbf, 0x99, 0xd5, 0xca, 0xc5, 0x00, 0x01, 0x00, 0x8e,
    0x00, 0xe1, 0x04, 0x1f, 0x04, 0x73, 0x00, 0x0b, 0x00, 0x06, 0xb3, 0x0b, 0x03, 0x01, 0x32, 0x2b,
    0x13, 0x01, 0x01, 0x37, 0x01, 0x01, 0x17, 0x01, 0x01, 0x07, 0x01, 0x01, 0x8e, 0x01, 0x62, 0xfe,
    0xa0, 0x68, 0x01, 0x5e, 0x01, 0x5e, 0x69, 0xfe, 0xa2, 0x01, 0x60, 0x66, 0xfe, 0x9f, 0xfe, 0x9c,
    0x01, 0x4a, 0x01, 0x62, 0x01, 0x60, 0x67, 0xfe, 0x9f, 0x01, 0x5f, 0x69, 0xfe, 0xa4, 0xfe, 0xa0,
    0x69, 0x01, 0x61, 0xfe, 0x9d, 0x00, 0x00, 0x01, 0x00, 0x50, 0x02, 0x33, 0x02, 0x7d, 0x05, 0x81,
    0x00, 0x0a, 0x00, 0x47, 0xb7, 0x05, 0x04, 0x03, 0x03, 0x00, 0x01, 0x01, 0x4c, 0x4b, 0xb0, 0x18,
    0x50, 0x58, 0x40, 0x12, 0x00, 0x01, 0x01, 0x70, 0x4d, 0x02, 0x01, 0x00, 0x00, 0x03, 0x60, 0x04,
    0x01, 0x03, 0x03, 0x71, 0x03, 0x4e, 0x1b, 0x40, 0x12, 0x00, 0x01, 0x00, 0x01, 0x85, 0x02, 0x01,
    0x00, 0x00, 0x03, 0x60, 0x04, 0x01, 0x03, 0x03, 0x71, 0x03, 0x4e, 0x59, 0x40, 0x0c, 0x00, 0x00,
    0x00, 0x0a, 0x00, 0x0a, 0x11, 0x14, 0x11, 0x05, 0x0d, 0x19, 0x2b, 0x13, 0x35, 0x33, 0x11, 0x07,
    0x35, 0x37, 0x33, 0x11, 0x33, 0x15, 0x50, 0xd3, 0xca, 0xd2, 0x7b, 0xd7, 0x02, 0x33, 0x6b, 0x02,
    0x6c, 0x8a, 0x78, 0x89, 0xfd, 0x1d, 0x6b, 0x00, 0x00, 0x01, 0x00, 0x29, 0x02, 0x33, 0x02, 0x83,
    0x05, 0x8d, 0x00, 0x1b, 0x00, 0x5c, 0xb5, 0x01, 0x01, 0x04, 0x03, 0x01, 0x4c, 0x4b, 0xb0, 0x21,
    0x50, 0x58, 0x40, 0x1e, 0x00, 0x01, 0x00, 0x03, 0x00, 0x01, 0x03, 0x80, 0x00, 0x00, 0x00, 0x02,
    0x61, 0x00, 0x02, 0x02, 0x70, 0x4d, 0x00, 0x03, 0x03, 0x04, 0x5f, 0x05, 0x01, 0x04, 0x04, 0x71,
    0x04, 0x4e, 0x1b, 0x40, 0x1c, 0x00, 0x01, 0x00, 0x03, 0x00, 0x01, 0x03, 0x80, 0x00, 0x02, 0x00,
    0x00, 0x01, 0x02, 0x00, 0x69, 0x00, 0x03, 0x03, 0x04, 0x5f, 0x05, 0x01, 0x04, 0x04, 0x71, 0x04,
    0x4e, 0x59, 0x40, 0x0d, 0x00, 0x00, 0x00, 0x1b, 0x00, 0x1b, 0x17, 0x22, 0x12, 0x29, 0x06, 0x0d,
    0x1a, 0x2b, 0x13, 0x27, 0x36, 0x36, 0x37, 0x36, 0x36, 0x35, 0x34, 0x26, 0x23, 0x22, 0x06, 0x07,
    0x27, 0x36, 0x36, 0x33, 0x32, 0x16, 0x15, 0x14, 0x07, 0x06, 0x06, 0x07, 0x21, 0x15, 0x2b, 0x02,
    0x1f, 0x81, 0x6b, 0x61, 0x58, 0x47, 0x4a, 0x44, 0x58, 0x08, 0x85, 0x0d, 0xa1, 0x81, 0x7f, 0x95,
    0xbc, 0x7a, 0x64, 0x14, 0x01, 0xbb, 0x02, 0x33, 0x67, 0x45, 0x83, 0x4a, 0x44, 0x70, 0x3a, 0x3e,
    0x4b, 0x49, 0x44, 0x08, 0x6b, 0x84, 0x7b, 0x6e, 0x93, 0x8a, 0x5a, 0x5c, 0x2d, 0x71, 0x00, 0x01,
    0x00, 0x1b, 0x02, 0x27, 0x02, 0x82, 0x05, 0x8d, 0x00, 0x25, 0x00, 0x61, 0x40, 0x10, 0x19, 0x18,
    0x02, 0x03, 0x04, 0x22, 0x01, 0x02, 0x03, 0x06, 0x05, 0x02, 0x01, 0x02, 0x03, 0x4c, 0x4b, 0xb0,
    0x21, 0x50, 0x58, 0x40, 0x1d, 0x00, 0x03, 0x00, 0x02, 0x01, 0x03, 0x02, 0x69, 0x00, 0x04, 0x04,
    0x05, 0x61, 0x00, 0x05, 0x05, 0x70, 0x4d, 0x00, 0x01, 0x01, 0x00, 0x61, 0x00, 0x00, 0x00, 0x77,
    0x00, 0x4e, 0x1b, 0x40, 0x1b, 0x00, 0x05, 0x00, 0x04, 0x03, 0x05, 0x04, 0x69, 0x00, 0x03, 0x00,
    0x02, 0x01, 0x03, 0x02, 0x69, 0x00, 0x01, 0x01, 0x00, 0x61, 0x00, 0x00, 0x00, 0x77, 0x00, 0x4e,
    0x59, 0x40, 0x09, 0x25, 0x24, 0x21, 0x22, 0x23, 0x22, 0x06, 0x0d, 0x1c, 0x2b, 0x01, 0x14, 0x06,
    0x23, 0x20, 0x27, 0x37, 0x16, 0x33, 0x32, 0x35, 0x34, 0x23, 0x23, 0x35, 0x33, 0x32, 0x36, 0x35,
    0x34, 0x26, 0x23, 0x22, 0x06, 0x07, 0x27, 0x36, 0x36, 0x33, 0x32, 0x16, 0x15, 0x14, 0x06, 0x07,
    0x15, 0x16, 0x16, 0x02, 0x82, 0x9b, 0x8e, 0xfe, 0xe2, 0x20, 0x88, 0x12, 0xa4, 0xa0, 0xbd, 0x3d,
    0x39, 0x50, 0x5c, 0x4a, 0x47, 0x44, 0x54, 0x06, 0x87, 0x0d, 0x9d, 0x7f, 0x82, 0x94, 0x56, 0x5a,
    0x5b, 0x6a, 0x03, 0x1b, 0x74, 0x80, 0xe3, 0x0d, 0x88, 0x94, 0x89, 0x6d, 0x48, 0x41, 0x3c, 0x45,
    0x46, 0x41, 0x0c, 0x6d, 0x78, 0x77, 0x62, 0x4b, 0x6e, 0x14, 0x02, 0x09, 0x69, 0x00, 0xff, 0xff,
    0x00, 0x38, 0x00, 0x00, 0x06, 0x75, 0x05, 0x81, 0x00, 0x26, 0x00, 0xbb, 0xe8, 0x00, 0x00, 0x27,
    0x00, 0x9d, 0x02, 0xf9, 0x00, 0x00, 0x01, 0x07, 0x00, 0xbc, 0x03, 0xf2, 0xfd, 0xcf, 0x00, 0x09,
    0xb1, 0x02, 0x01, 0xb8, 0xfd, 0xcf, 0xb0, 0x35, 0x2b, 0x00, 0xff, 0xff, 0x00, 0x38, 0x00, 0x00,
    0x06, 0x4e, 0x05, 0x81, 0x00, 0x26, 0x00, 0xbb, 0xe8, 0x00, 0x00, 0x27, 0x00, 0x9d, 0x02, 0xf9,
    0x00, 0x00, 0x01, 0x07, 0x00, 0xc4, 0x03, 0xb8, 0xfd, 0xcf, 0x00, 0x09, 0xb1, 0x02, 0x02, 0xb8,
    0xfd, 0xcf, 0xb0, 0x35, 0x2b, 0x00, 0xff, 0xff, 0x00, 0x49, 0x00, 0x00, 0x06, 0x4e, 0x05, 0x8d,
    0x00, 0x27, 0x00, 0x9d, 0x03, 0x0d, 0x00, 0x00, 0x00, 0x27, 0x00, 0xc4, 0x03, 0xb8, 0xfd, 0xcf,
    0x01, 0x06, 0x00, 0xbd, 0x2e, 0x00, 0x00, 0x09, 0xb1, 0x01, 0x02, 0xb8, 0xfd, 0xcf, 0xb0, 0x35,
    0x2b, 0x00, 0x00, 0x01, 0xff, 0xef, 0x05, 0xac, 0x04, 0x7c, 0x06, 0x0a, 0x00, 0x03, 0x00, 0x20,
    0xb1, 0x06, 0x64, 0x44, 0x40, 0x15, 0x00, 0x01, 0x00, 0x00, 0x01, 0x57, 0x00, 0x01, 0x01, 0x00,
    0x5f, 0x00, 0x00, 0x01, 0x00, 0x4f, 0x11, 0x10, 0x02, 0x0b, 0x18, 0x2b, 0xb1, 0x06, 0x00, 0x44,
    0x01, 0x21, 0x35, 0x21, 0x04, 0x7c, 0xfb, 0x73, 0x04, 0x8d, 0x05, 0xac, 0x5e, 0x00, 0xff, 0xff,
    0x00, 0xf3, 0x01, 0xbe, 0x01, 0xb6, 0x02, 0x9a, 0x00, 0x06, 0x00, 0x9e, 0x38, 0x00, 0x00, 0x02,
    0x00, 0x71, 0x00, 0xe1, 0x04, 0x02, 0x04, 0x73, 0x00, 0x1b, 0x00, 0x26, 0x00, 0x3d, 0x40, 0x3a,
    0x0b, 0x09, 0x05, 0x03, 0x04, 0x03, 0x00, 0x1a, 0x10, 0x0c, 0x02, 0x04, 0x02, 0x03, 0x19, 0x17,
    0x13, 0x11, 0x04, 0x01, 0x02, 0x03, 0x4c, 0x0a, 0x04, 0x02, 0x00, 0x4a, 0x18, 0x12, 0x02, 0x01,
    0x49, 0x00, 0x02, 0x00, 0x01, 0x02, 0x01, 0x65, 0x00, 0x03, 0x03, 0x00, 0x61, 0x00, 0x00, 0x00,
    0x59, 0x03, 0x4e, 0x14, 0x28, 0x2c, 0x26, 0x04, 0x0b, 0x1a, 0x2b, 0x13, 0x34, 0x37, 0x27, 0x37,
    0x17, 0x36, 0x33, 0x32, 0x17, 0x37, 0x17, 0x07, 0x16, 0x15, 0x14, 0x07, 0x17, 0x07, 0x27, 0x06,
    0x23, 0x22, 0x27, 0x07, 0x27, 0x37, 0x26, 0x37, 0x14, 0x16, 0x33, 0x32, 0x36, 0x35, 0x34, 0x26,
    0x22, 0x06, 0x89, 0x4e, 0x64, 0x68, 0x63, 0x72, 0x8c, 0x89, 0x72, 0x61, 0x68, 0x60, 0x50, 0x52,
    0x64, 0x66, 0x65, 0x72, 0x89, 0x8f, 0x6d, 0x69, 0x66, 0x66, 0x4e, 0x9a, 0xa6, 0x73, 0x72, 0xa6,
    0xa7, 0xe2, 0xa8, 0x02, 0xac, 0x8a, 0x72, 0x64, 0x67, 0x65, 0x52, 0x50, 0x61, 0x69, 0x60, 0x75,
    0x87, 0x8a, 0x72, 0x64, 0x69, 0x65, 0x4e, 0x50, 0x69, 0x69, 0x66, 0x72, 0x8c, 0x75, 0xa3, 0xa2,
    0x76, 0x75, 0xa4, 0xa3, 0x00, 0x02, 0x00, 0x0e, 0x02, 0x33, 0x02, 0x96, 0x05, 0x81, 0x00, 0x0a,
    0x00, 0x10, 0x00, 0x55, 0x40, 0x0a, 0x0b, 0x01, 0x03, 0x02, 0x05, 0x01, 0x01, 0x03, 0x02, 0x4c,
    0x4b, 0xb0, 0x18, 0x50, 0x58, 0x40, 0x16, 0x05, 0x01, 0x03, 0x06, 0x04, 0x02, 0x01, 0x00, 0x03,
    0x01, 0x68, 0x00, 0x02, 0x02, 0x70, 0x4d, 0x00, 0x00, 0x00, 0x71, 0x00, 0x4e, 0x1b, 0x40, 0x16,
    0x00, 0x02, 0x03, 0x02, 0x85, 0x05, 0x01, 0x03, 0x06, 0x04, 0x02, 0x01, 0x00, 0x03, 0x01, 0x68,
    0x00, 0x00, 0x00, 0x71, 0x00, 0x4e, 0x59, 0x40, 0x0f, 0x00, 0x00, 0x0f, 0x0e, 0x00, 0x0a, 0x00,
    0x0a, 0x11, 0x12, 0x11, 0x11, 0x07, 0x0d, 0x1a, 0x2b, 0x01, 0x15, 0x23, 0x35, 0x21, 0x35, 0x01,
    0x33, 0x11, 0x33, 0x15, 0x03, 0x06, 0x07, 0x03, 0x21, 0x11, 0x02, 0x27, 0x83, 0xfe, 0x6a, 0x01,
    0x82, 0x97, 0x6f, 0xf0, 0x15, 0x3d, 0xc7, 0x01, 0x17, 0x02, 0xe5, 0xb2, 0xb2, 0x6f, 0x02, 0x2d,
    0xfd, 0xd5, 0x71, 0x02, 0x17, 0x28, 0x5f, 0xfe, 0xe1, 0x01, 0x68, 0x00, 0x00, 0x01, 0x00, 0x6a,
    0x05, 0xfa, 0x02, 0x12, 0x06, 0xf0, 0x00, 0x05, 0x00, 0x1e, 0x40, 0x1b, 0x04, 0x01, 0x02, 0x01,
    0x00, 0x01, 0x4c, 0x00, 0x00, 0x01, 0x00, 0x85, 0x02, 0x01, 0x01, 0x01, 0x76, 0x00, 0x00, 0x00,
    0x05, 0x00, 0x05, 0x12, 0x03, 0x0b, 0x17, 0x2b, 0x01, 0x25, 0x35, 0x33, 0x17, 0x15, 0x01, 0xa0,
    0xfe, 0xca, 0xcf, 0xd9, 0x05, 0xfa, 0xd9, 0x1d, 0xe2, 0x14, 0x00, 0x01, 0x00, 0x48, 0x05, 0xfa,
    0x01, 0xf0, 0x06, 0xf0, 0x00, 0x05, 0x00, 0x1e, 0x40, 0x1b, 0x04, 0x01, 0x02, 0x01, 0x00, 0x01,
    0x4c, 0x00, 0x00, 0x01, 0x00, 0x85, 0x02, 0x01, 0x01, 0x01, 0x76, 0x00, 0x00, 0x00, 0x05, 0x00,
    0x05, 0x12, 0x03, 0x0b, 0x17, 0x2b, 0x13, 0x35, 0x37, 0x33, 0x15, 0x05, 0x48, 0xd9, 0xcf, 0xfe,
    0xca, 0x05, 0xfa, 0x14, 0xe2, 0x1d, 0xd9, 0x00, 0x00, 0x01, 0x00, 0x00, 0x05, 0xfa, 0x02, 0x96,
    0x06, 0xfe, 0x00, 0x09, 0x00, 0x1b, 0x40, 0x18, 0x07, 0x03, 0x00, 0x03, 0x00, 0x02, 0x01, 0x4c,
    0x00, 0x02, 0x00, 0x02, 0x85, 0x01, 0x01, 0x00, 0x00, 0x76, 0x12, 0x13, 0x11, 0x03, 0x0b, 0x19,
    0x2b, 0x01, 0x15, 0x23, 0x27, 0x23, 0x07, 0x23, 0x35, 0x37, 0x33, 0x02, 0x96, 0x69, 0xdb, 0x02,
    0xe8, 0x68, 0xea, 0xcc, 0x06, 0x0e, 0x14, 0x8b, 0x8b, 0x14, 0xf0, 0x00, 0x00, 0x02, 0x00, 0x2d,
    0x05, 0xfa, 0x02, 0x5a, 0x06, 0xb2, 0x00, 0x03, 0x00, 0x07, 0x00, 0x2a, 0x40, 0x27, 0x02, 0x01,
    0x00, 0x01, 0x01, 0x00, 0x57, 0x02, 0x01, 0x00, 0x00, 0x01, 0x5f, 0x05, 0x03, 0x04, 0x03, 0x01,
    0x00, 0x01, 0x4f, 0x04, 0x04, 0x00, 0x00, 0x04, 0x07, 0x04, 0x07, 0x06, 0x05, 0x00, 0x03, 0x00,
    0x03, 0x11, 0x06, 0x0b, 0x17, 0x2b, 0x13, 0x35, 0x33, 0x15, 0x33, 0x35, 0x33, 0x15, 0x2d, 0xa5,
    0xe5, 0xa3, 0x05, 0xfa, 0xb8, 0xb8, 0xb8, 0xb8, 0x00, 0x01, 0xff, 0xe9, 0x05, 0xfa, 0x02, 0xb6,
    0x07, 0x06, 0x00, 0x17, 0x00, 0x31, 0x40, 0x2e, 0x00, 0x04, 0x01, 0x00, 0x04, 0x59, 0x05, 0x01,
    0x03, 0x00, 0x01, 0x00, 0x03, 0x01, 0x69, 0x00, 0x04, 0x04, 0x00, 0x61, 0x02, 0x06, 0x02, 0x00,
    0x04, 0x00, 0x51, 0x01, 0x00, 0x15, 0x14, 0x13, 0x11, 0x0e, 0x0c, 0x09, 0x08, 0x06, 0x04, 0x00,
    0x17, 0x01, 0x17, 0x07, 0x0b, 0x16, 0x2b, 0x01, 0x22, 0x2e, 0x02, 0x23, 0x22, 0x06, 0x07, 0x23,
    0x3e, 0x02, 0x33, 0x32, 0x1e, 0x02, 0x33, 0x32, 0x37, 0x33, 0x06, 0x06, 0x01, 0xec, 0x2a, 0x54,
    0x4e, 0x47, 0x1f, 0x37, 0x36, 0x09, 0x5b, 0x0b, 0x30, 0x51, 0x3f, 0x2c, 0x54, 0x4e, 0x45, 0x1e,
    0x64, 0x11, 0x5c, 0x11, 0x64, 0x05, 0xfa, 0x25, 0x2d, 0x25, 0x3e, 0x39, 0x66, 0x69, 0x3d, 0x25,
    0x2d, 0x25, 0x77, 0x94, 0x78, 0x00, 0x00, 0x00, 0x00, 0x01, 0x00, 0x00, 0x00, 0xca, 0x01, 0x52,
    0x00, 0x54, 0x00, 0x5c, 0x00, 0x06, 0x00, 0x02, 0x01, 0xae, 0x02, 0x9d, 0x00, 0x8d, 0x00, 0x00,
    0x03, 0x4c, 0x0e, 0x15, 0x00, 0x04, 0x00, 0x01, 0x00, 0x00, 0x00, 0x00, 0x00, 0x00, 0x00, 0x26,
    0x00, 0x47, 0x00, 0xa6, 0x01, 0x4a, 0x01, 0xf1, 0x02, 0x90, 0x02, 0xa7, 0x02, 0xd0, 0x02, 0xf8,
    0x03, 0x28, 0x03, 0x56, 0x03, 0x88, 0x03, 0xa4, 0x03, 0xbc, 0x03, 0xd7, 0x04, 0x14, 0x04, 0x3f,
    0x04, 0x85, 0x04, 0xdd, 0x05, 0x1e, 0x05, 0x6c, 0x05, 0xbf, 0x05, 0xea, 0x06, 0x49, 0x06, 0x9e,
    0x06, 0xc5, 0x07, 0x0b, 0x07, 0x22, 0x07, 0x4d, 0x07, 0x63, 0x07, 0xb5, 0x08, 0x6b, 0x08, 0xa4,
    0x08, 0xf1, 0x09, 0x3b, 0x09, 0x74, 0x09, 0xa3, 0x09, 0xcd, 0x0a, 0x1e, 0x0a, 0x49, 0x0a, 0x62,
    0x0a, 0x99, 0x0a, 0xc8, 0x0a, 0xe6, 0x0b, 0x2b, 0x0b, 0x59, 0x0b, 0x9e, 0x0b, 0xd3, 0x0c, 0x84,
    0x0c, 0xc8, 0x0d, 0x21, 0x0d, 0x44, 0x0d, 0x78, 0x0d, 0x9c, 0x0d, 0xdd, 0x0e, 0x10, 0x0e, 0x36,
    0x0e, 0x61, 0x0e, 0x85, 0x0e, 0xa1, 0x0e, 0xc5, 0x0e, 0xee, 0x0f, 0x0e, 0x0f, 0x32, 0x0f, 0xca,
    0x10, 0x2e, 0x10, 0x71, 0x10, 0xd5, 0x11, 0x21, 0x11, 0x5f, 0x11, 0xe2, 0x12, 0x1b, 0x12, 0x43,
    0x12, 0x7b, 0x12, 0xac, 0x12, 0xc5, 0x13, 0x2c, 0x13, 0x7c, 0x13, 0xb4, 0x14, 0x19, 0x14, 0x6c,
    0x14, 0xbd, 0x15, 0x11, 0x15, 0x4b, 0x15, 0x9c, 0x15, 0xc2, 0x15, 0xfb, 0x16, 0x2e, 0x16, 0x6f,
    0x16, 0x9c, 0x16, 0xee, 0x17, 0x08, 0x17, 0x59, 0x17, 0x9f, 0x17, 0xab, 0x17, 0xbc, 0x17, 0xc8,
    0x17, 0xd4, 0x17, 0xe0, 0x17, 0xec, 0x17, 0xf8, 0x18, 0x04, 0x18, 0x10, 0x18, 0x1c, 0x18, 0x28,
    0x18, 0x34, 0x18, 0x40, 0x18, 0x4c, 0x18, 0x58, 0x18, 0x64, 0x18, 0x70, 0x18, 0x7c, 0x18, 0x87,
    0x18, 0x92, 0x18, 0x9d, 0x18, 0xa8, 0x18, 0xb4, 0x18, 0xc0, 0x18, 0xcc, 0x18, 0xd8, 0x18, 0xe4,
    0x18, 0xf0, 0x18, 0xfc, 0x19, 0x08, 0x19, 0x14, 0x19, 0x20, 0x19, 0x56, 0x19, 0xbe, 0x1a, 0x13,
    0x1a, 0x96, 0x1a, 0xc8, 0x1b, 0x44, 0x1b, 0xcb, 0x1c, 0x48, 0x1c, 0x6c, 0x1c, 0x96, 0x1c, 0xde,
    0x1d, 0x40, 0x1d, 0x7b, 0x1d, 0xc1, 0x1e, 0x0b, 0x1e, 0x77, 0x1e, 0xab, 0x1f, 0x65, 0x1f, 0xe4,
    0x20, 0x33, 0x20, 0x58, 0x20, 0x7a, 0x20, 0xbe, 0x20, 0xf9, 0x21, 0x05, 0x21, 0x11, 0x21, 0x1d,
    0x21, 0x56, 0x21, 0x62, 0x21, 0x79, 0x21, 0x94, 0x21, 0xa0, 0x21, 0xac, 0x21, 0xb8, 0x21, 0xc4,
    0x21, 0xd0, 0x21, 0xdb, 0x21, 0xe6, 0x21, 0xf1, 0x21, 0xfc, 0x22, 0x08, 0x22, 0x14, 0x22, 0x20,
    0x22, 0x2c, 0x22, 0x38, 0x22, 0x44, 0x22, 0x5d, 0x22, 0x83, 0x22, 0xc6, 0x23, 0x00, 0x23, 0x53,
    0x23, 0x7d, 0x23, 0xc7, 0x24, 0x27, 0x24, 0x33, 0x24, 0x3f, 0x24, 0x7a, 0x24, 0xc8, 0x24, 0xed,
    0x25, 0x26, 0x25, 0x81, 0x25, 0xe9, 0x25, 0xff, 0x26, 0x15, 0x26, 0x2b, 0x26, 0x49, 0x26, 0x51,
    0x26, 0xac, 0x26, 0xf8, 0x27, 0x17, 0x27, 0x36, 0x27, 0x58, 0x27, 0x7e, 0x27, 0xbd, 0x00, 0x00,
    0x00, 0x01, 0x00, 0x00, 0x00, 0x01, 0x54, 0x7b, 0xb5, 0x22, 0x40, 0x11, 0x5f, 0x0f, 0x3c, 0xf5,
    0x00, 0x07, 0x08, 0x00, 0x00, 0x00, 0x00, 0x00, 0xd9, 0xf8, 0xd2, 0x19, 0x00, 0x00, 0x00, 0x00,
    0xdb, 0xae, 0x8b, 0x5e, 0xfb, 0xa6, 0xfc, 0xe3, 0x16, 0x60, 0x08, 0x58, 0x00, 0x00, 0x00, 0x06,
    0x00, 0x02, 0x00, 0x00, 0x00, 0x00, 0x00, 0x00, 0x06, 0x00, 0x00, 0xcd, 0x02, 0x39, 0x00, 0x00,
    0x02, 0x39, 0x00, 0xb9, 0x02, 0xd7, 0x00, 0x57, 0x04, 0x73, 0x00, 0x09, 0x04, 0x73, 0x00, 0x16,
    0x07, 0x1d, 0x00, 0x49, 0x05, 0x56, 0x00, 0x48, 0x01, 0x87, 0x00, 0x68, 0x02, 0xaa, 0x00, 0x7f,
    0x02, 0xaa, 0x00, 0x0c, 0x03, 0x1d, 0x00, 0x21, 0x04, 0xac, 0x00, 0x64, 0x02, 0x39, 0x00, 0xb8,
    0x02, 0xaa, 0x00, 0x5b, 0x02, 0x39, 0x00, 0xbb, 0x02, 0x39, 0x00, 0x00, 0x04, 0x73, 0x00, 0x50,
    0x04, 0x73, 0x00, 0x9c, 0x04, 0x73, 0x00, 0x67, 0x04, 0x73, 0x00, 0x4e, 0x04, 0x73, 0x00, 0x2f,
    0x04, 0x73, 0x00, 0x52, 0x04, 0x73, 0x00, 0x68, 0x04, 0x73, 0x00, 0x69, 0x04, 0x73, 0x00, 0x59,
    0x04, 0x73, 0x00, 0x60, 0x02, 0x39, 0x00, 0xbb, 0x02, 0x39, 0x00, 0xb8, 0x04, 0xac, 0x00, 0x65,
    0x04, 0xac, 0x00, 0x64, 0x04, 0xac, 0x00, 0x65, 0x04, 0x73, 0x00, 0x54, 0x08, 0x1f, 0x00, 0xa1,
    0x05, 0x56, 0x00, 0x04, 0x05, 0x56, 0x00, 0xa8, 0x05, 0xc7, 0x00, 0x68, 0x05, 0xc7, 0x00, 0xa8,
    0x05, 0x56, 0x00, 0xa8, 0x04, 0xe3, 0x00, 0xa8, 0x06, 0x39, 0x00, 0x67, 0x05, 0xc7, 0x00, 0xa8,
    0x02, 0x39, 0x00, 0xbd, 0x04, 0x00, 0x00, 0x20, 0x05, 0x56, 0x00, 0xa8, 0x04, 0x73, 0x00, 0xa8,
    0x06, 0xaa, 0x00, 0xa8, 0x05, 0xc7, 0x00, 0xa8, 0x06, 0x39, 0x00, 0x61, 0x05, 0x56, 0x00, 0xa8,
    0x06, 0x39, 0x00, 0x61, 0x05, 0xc7, 0x00, 0xa8, 0x05, 0x56, 0x00, 0x5d, 0x04, 0xe3, 0x00, 0x2e,
    0x05, 0xc7, 0x00, 0x9e, 0x05, 0x56, 0x00, 0x09, 0x07, 0x8d, 0x00, 0x09, 0x05, 0x56, 0x00, 0x2e,
    0x05, 0x56, 0x00, 0x2d, 0x04, 0xe3, 0x00, 0x41, 0x02, 0x39, 0x00, 0x92, 0x02, 0x39, 0x00, 0x00,
    0x02, 0x39, 0x00, 0x10, 0x03, 0xc1, 0x00, 0x0a, 0x04, 0x73, 0xff, 0xe1, 0x02, 0xaa, 0x00, 0x6a,
    0x04, 0x73, 0x00, 0x57, 0x04, 0x73, 0x00, 0x84, 0x04, 0x00, 0x00, 0x57, 0x04, 0x73, 0x00, 0x56,
    0x04, 0x73, 0x00, 0x57, 0x02, 0x39, 0x00, 0x1d, 0x04, 0x73, 0x00, 0x56, 0x04, 0x73, 0x00, 0x8e,
    0x01, 0xc7, 0x00, 0x89, 0x01, 0xc7, 0xff, 0xce, 0x04, 0x00, 0x00, 0x8a, 0x01, 0xc7, 0x00, 0x8a,
    0x06, 0xaa, 0x00, 0x88, 0x04, 0x73, 0x00, 0x88, 0x04, 0x73, 0x00, 0x56, 0x04, 0x73, 0x00, 0x84,
    0x04, 0x73, 0x00, 0x56, 0x02, 0xaa, 0x00, 0x88, 0x04, 0x00, 0x00, 0x39, 0x02, 0x39, 0x00, 0x1f,
    0x04, 0x73, 0x00, 0x85, 0x04, 0x00, 0x00, 0x07, 0x05, 0xc7, 0xff, 0xfd, 0x04, 0x00, 0x00, 0x17,
    0x04, 0x00, 0x00, 0x05, 0x04, 0x00, 0x00, 0x53, 0x02, 0xac, 0x00, 0x22, 0x02, 0x14, 0x00, 0xb7,
    0x02, 0xac, 0x00, 0x22, 0x04, 0xac, 0x00, 0x5c, 0x05, 0x56, 0x00, 0x04, 0x05, 0x56, 0x00, 0x04,
    0x05, 0xc7, 0x00, 0x68, 0x05, 0x56, 0x00, 0xa8, 0x05, 0xc7, 0x00, 0xa8, 0x06, 0x39, 0x00, 0x61,
    0x05, 0xc7, 0x00, 0x9e, 0x04, 0x73, 0x00, 0x57, 0x04, 0x73, 0x00, 0x57, 0x04, 0x73, 0x00, 0x57,
    0x04, 0x73, 0x00, 0x57, 0x04, 0x73, 0x00, 0x57, 0x04, 0x73, 0x00, 0x57, 0x04, 0x00, 0x00, 0x57,
    0x04, 0x73, 0x00, 0x57, 0x04, 0x73, 0x00, 0x57, 0x04, 0x73, 0x00, 0x57, 0x04, 0x73, 0x00, 0x57,
    0x02, 0x39, 0x00, 0x87, 0x02, 0x39, 0x00, 0x0a, 0x02, 0x39, 0xff, 0xd3, 0x02, 0x39, 0x00, 0x08,
    0x04, 0x73, 0x00, 0x8c, 0x04, 0x73, 0x00, 0x56, 0x04, 0x73, 0x00, 0x56, 0x04, 0x73, 0x00, 0x56,
    0x04, 0x73, 0x00, 0x56, 0x04, 0x73, 0x00, 0x56, 0x04, 0x73, 0x00, 0x8b, 0x04, 0x73, 0x00, 0x8b,
    0x04, 0x73, 0x00, 0x8b, 0x04, 0x73, 0x00, 0x8b, 0x03, 0x33, 0x00, 0x7a, 0x04, 0x73, 0x00, 0x87,
    0x04, 0x73, 0x00, 0x3a, 0x04, 0x73, 0x00, 0x73, 0x04, 0x4c, 0x00, 0x50, 0x04, 0xe3, 0x00, 0x8e,
    0x05, 0xe5, 0x00, 0x1f, 0x05, 0xe5, 0x00, 0x1f, 0x02, 0xaa, 0x00, 0x48, 0x02, 0xaa, 0x00, 0x2d,
    0x08, 0x00, 0x00, 0x18, 0x06, 0x39, 0x00, 0x47, 0x04, 0x64, 0x00, 0x41, 0x04, 0x73, 0xff, 0xfe,
    0x04, 0x9c, 0x00, 0x8c, 0x02, 0xf6, 0x00, 0x1a, 0x02, 0xec, 0x00, 0x1b, 0x07, 0x1d, 0x00, 0x42,
    0x04, 0xe3, 0x00, 0x2c, 0x04, 0xe3, 0x00, 0x83, 0x02, 0xaa, 0x00, 0xf2, 0x04, 0xac, 0x00, 0x64,
    0x04, 0x73, 0x00, 0x53, 0x04, 0x73, 0x00, 0x53, 0x05, 0x56, 0x00, 0x04, 0x05, 0x56, 0x00, 0x04,
    0x06, 0x39, 0x00, 0x61, 0x04, 0x64, 0x00, 0x41, 0x04, 0x00, 0x00, 0x05, 0x01, 0x56, 0xfe, 0x60,
    0x02, 0x39, 0x00, 0xbb, 0x05, 0x56, 0x00, 0x04, 0x05, 0x56, 0x00, 0xa8, 0x05, 0x56, 0x00, 0x04,
    0x05, 0x56, 0x00, 0xa8, 0x05, 0x56, 0x00, 0xa8, 0x02, 0x39, 0x00, 0x8e, 0x02, 0x39, 0xff, 0xd2,
    0x02, 0x39, 0x00, 0x07, 0x02, 0x39, 0x00, 0x09, 0x06, 0x39, 0x00, 0x61, 0x06, 0x39, 0x00, 0x61,
    0x06, 0x39, 0x00, 0x61, 0x05, 0xc7, 0x00, 0x9e, 0x05, 0xc7, 0x00, 0x9e, 0x05, 0xc7, 0x00, 0x9e,
    0x02, 0x39, 0x00, 0xc2, 0x02, 0xaa, 0x00, 0x00, 0x02, 0xaa, 0xff, 0xe9, 0x02, 0xaa, 0x00, 0x33,
    0x02, 0xaa, 0x00, 0x77, 0x02, 0x14, 0x00, 0xb7, 0x05, 0xc7, 0x00, 0x0e, 0x04, 0x73, 0x00, 0x56,
    0x05, 0x56, 0x00, 0x2d, 0x04, 0x00, 0x00, 0x05, 0x05, 0x56, 0x00, 0xa8, 0x04, 0x73, 0x00, 0x8a,
    0x04, 0xac, 0x00, 0x8e, 0x02, 0xaa, 0x00, 0x50, 0x02, 0xaa, 0x00, 0x29, 0x02, 0xaa, 0x00, 0x1b,
    0x06, 0xac, 0x00, 0x38, 0x06, 0xac, 0x00, 0x38, 0x06, 0xac, 0x00, 0x49, 0x04, 0x6b, 0xff, 0xef,
    0x02, 0xaa, 0x00, 0xf3, 0x04, 0x73, 0x00, 0x71, 0x02, 0xaa, 0x00, 0x0e, 0x02, 0x5a, 0x00, 0x6a,
    0x02, 0x5a, 0x00, 0x48, 0x02, 0x98, 0x00, 0x00, 0x02, 0x87, 0x00, 0x2d, 0x02, 0xa0, 0xff, 0xe9,
    0x00, 0x01, 0x00, 0x00, 0x07, 0x3e, 0xfe, 0x4e, 0x00, 0x43, 0x16, 0xb2, 0xfb, 0xa6, 0xfa, 0x7a,
    0x16, 0x60, 0x00, 0x01, 0x00, 0x00, 0x00, 0x00, 0x00, 0x00, 0x00, 0x00, 0x00, 0x00, 0x00, 0x00,
    0x00, 0x00, 0x00, 0xca, 0x00, 0x04, 0x04, 0xa7, 0x01, 0x90, 0x00, 0x05, 0x00, 0x00, 0x05, 0x33,
    0x04, 0xcd, 0x00, 0x00, 0x00, 0x9a, 0x05, 0x33, 0x04, 0xcd, 0x00, 0x00, 0x02, 0xcd, 0x00, 0x66,
    0x02, 0x12, 0x00, 0x00, 0x02, 0x0b, 0x06, 0x04, 0x02, 0x02, 0x02, 0x02, 0x02, 0x04, 0x00, 0x00,
    0x00, 0x03, 0x00, 0x00, 0x00, 0x00, 0x00, 0x00, 0x00, 0x00, 0x00, 0x00, 0x00, 0x00, 0x47, 0x4f,
    0x4f, 0x47, 0x00, 0x40, 0x00, 0x20, 0x00, 0xff, 0x05, 0xd3, 0xfe, 0x51, 0x01, 0x33, 0x07, 0x3e,
    0x01, 0xb2, 0x60, 0x00, 0x01, 0xbf, 0xdf, 0xf7, 0x00, 0x00, 0x04, 0x3a, 0x05, 0x81, 0x00, 0x00,
    0x00, 0x20, 0x00, 0x00, 0x00, 0x00, 0x00, 0x02, 0x00, 0x00, 0x00, 0x03, 0x00, 0x00, 0x00, 0x14,
    0x00, 0x03, 0x00, 0x01, 0x00, 0x00, 0x00, 0x14, 0x00, 0x04, 0x00, 0xe8, 0x00, 0x00, 0x00, 0x06,
    0x00, 0x04, 0x00, 0x01, 0x00, 0x02, 0x00, 0x7e, 0x00, 0xff, 0xff, 0xff, 0x00, 0x00, 0x00, 0x20,
    0x00, 0xa0, 0xff, 0xff, 0xff, 0xe1, 0x00, 0x00, 0x00, 0x01, 0x00, 0x00, 0x00, 0x04, 0x00, 0x00,
    0x00, 0x01, 0x00, 0x94, 0x00, 0x81, 0x00, 0x82, 0x00, 0xc3, 0x00, 0x8d, 0x00, 0xb3, 0x00, 0x83,
    0x00, 0x89, 0x00, 0x87, 0x00, 0x8f, 0x00, 0x96, 0x00, 0x95, 0x00, 0x0e, 0x00, 0x86, 0x00, 0xc1,
    0x00, 0x80, 0x00, 0x8c, 0x00, 0xbc, 0x00, 0xbd, 0x00, 0x88, 0x00, 0x8e, 0x00, 0x84, 0x00, 0xc2,
    0x00, 0xb2, 0x00, 0xbb, 0x00, 0x90, 0x00, 0x97, 0x00, 0xbf, 0x00, 0xbe, 0x00, 0xc0, 0x00, 0x93,
    0x00, 0x98, 0x00, 0xa1, 0x00, 0x9f, 0x00, 0x99, 0x00, 0x60, 0x00, 0x61, 0x00, 0x8a, 0x00, 0x62,
    0x00, 0xa3, 0x00, 0x63, 0x00, 0xa0, 0x00, 0xa2, 0x00, 0xa7, 0x00, 0xa4, 0x00, 0xa5, 0x00, 0xa6,
    0x00, 0xb4, 0x00, 0x64, 0x00, 0xaa, 0x00, 0xa8, 0x00, 0xa9, 0x00, 0x9a, 0x00, 0x65, 0x00, 0xba,
    0x00, 0x8b, 0x00, 0xad, 0x00, 0xab, 0x00, 0xac, 0x00, 0x66, 0x00, 0xb6, 0x00, 0xb8, 0x00, 0x85,
    0x00, 0x68, 0x00, 0x67, 0x00, 0x69, 0x00, 0x6b, 0x00, 0x6a, 0x00, 0x6c, 0x00, 0x91, 0x00, 0x6d,
    0x00, 0x6f, 0x00, 0x6e, 0x00, 0x70, 0x00, 0x71, 0x00, 0x73, 0x00, 0x72, 0x00, 0x74, 0x00, 0x75,
    0x00, 0xb5, 0x00, 0x76, 0x00, 0x78, 0x00, 0x77, 0x00, 0x79, 0x00, 0x7b, 0x00, 0x7a, 0x00, 0x9b,
    0x00, 0x92, 0x00, 0x7d, 0x00, 0x7c, 0x00, 0x7e, 0x00, 0x7f, 0x00, 0xb7, 0x00, 0xb9, 0x00, 0x9c,
    0xb0, 0x00, 0x2c, 0x20, 0xb0, 0x00, 0x55, 0x58, 0x45, 0x59, 0x20, 0x20, 0x4b, 0xb8, 0x00, 0x0e,
    0x51, 0x4b, 0xb0, 0x06, 0x53, 0x5a, 0x58, 0xb0, 0x34, 0x1b, 0xb0, 0x28, 0x59, 0x60, 0x66, 0x20,
    0x8a, 0x55, 0x58, 0xb0, 0x02, 0x25, 0x61, 0xb9, 0x08, 0x00, 0x08, 0x00, 0x63, 0x63, 0x23, 0x62,
    0x1b, 0x21, 0x21, 0xb0, 0x00, 0x59, 0xb0, 0x00, 0x43, 0x23, 0x44, 0xb2, 0x00, 0x01, 0x00, 0x43,
    0x60, 0x42, 0x2d, 0xb0, 0x01, 0x2c, 0xb0, 0x20, 0x60, 0x66, 0x2d, 0xb0, 0x02, 0x2c, 0x23, 0x21,
    0x23, 0x21, 0x2d, 0xb0, 0x03, 0x2c, 0x20, 0x64, 0xb3, 0x03, 0x14, 0x15, 0x00, 0x42, 0x43, 0xb0,
    0x13, 0x43, 0x20, 0x60, 0x60, 0x42, 0xb1, 0x02, 0x14, 0x43, 0x42, 0xb1, 0x25, 0x03, 0x43, 0xb0,
    0x02, 0x43, 0x54, 0x78, 0x20, 0xb0, 0x0c, 0x23, 0xb0, 0x02, 0x43, 0x43, 0x61, 0x64, 0xb0, 0x04,
    0x50, 0x78, 0xb2, 0x02, 0x02, 0x02, 0x43, 0x60, 0x42, 0xb0, 0x21, 0x65, 0x1c, 0x21, 0xb0, 0x02,
    0x43, 0x43, 0xb2, 0x0e, 0x15, 0x01, 0x42, 0x1c, 0x20, 0xb0, 0x02, 0x43, 0x23, 0x42, 0xb2, 0x13,
    0x01, 0x13, 0x43, 0x60, 0x42, 0x23, 0xb0, 0x00, 0x50, 0x58, 0x65, 0x59, 0xb2, 0x16, 0x01, 0x02,
    0x43, 0x60, 0x42, 0x2d, 0xb0, 0x04, 0x2c, 0xb0, 0x03, 0x2b, 0xb0, 0x15, 0x43, 0x58, 0x23, 0x21,
    0x23, 0x21, 0xb0, 0x16, 0x43, 0x43, 0x23, 0xb0, 0x00, 0x50, 0x58, 0x65, 0x59, 0x1b, 0x20, 0x64,
    0x20, 0xb0, 0xc0, 0x50, 0xb0, 0x04, 0x26, 0x5a, 0xb2, 0x28, 0x01, 0x0d, 0x43, 0x45, 0x63, 0x45,
    0xb0, 0x06, 0x45, 0x58, 0x21, 0xb0, 0x03, 0x25, 0x59, 0x52, 0x5b, 0x58, 0x21, 0x23, 0x21, 0x1b,
    0x8a, 0x58, 0x20, 0xb0, 0x50, 0x50, 0x58, 0x21, 0xb0, 0x40, 0x59, 0x1b, 0x20, 0xb0, 0x38, 0x50,
    0x58, 0x21, 0xb0, 0x38, 0x59, 0x59, 0x20, 0xb1, 0x01, 0x0d, 0x43, 0x45, 0x63, 0x45, 0x61, 0x64,
    0xb0, 0x28, 0x50, 0x58, 0x21, 0xb1, 0x01, 0x0d, 0x43, 0x45, 0x63, 0x45, 0x20, 0xb0, 0x30, 0x50,
    0x58, 0x21, 0xb0, 0x30, 0x59, 0x1b, 0x20, 0xb0, 0xc0, 0x50, 0x58, 0x20, 0x66, 0x20, 0x8a, 0x8a,
    0x61, 0x20, 0xb0, 0x0a, 0x50, 0x58, 0x60, 0x1b, 0x20, 0xb0, 0x20, 0x50, 0x58, 0x21, 0xb0, 0x0a,
    0x60, 0x1b, 0x20, 0xb0, 0x36, 0x50, 0x58, 0x21, 0xb0, 0x36, 0x60, 0x1b, 0x60, 0x59, 0x59, 0x59,
    0x1b, 0xb0, 0x02, 0x25, 0xb0, 0x0c, 0x43, 0x63, 0xb0, 0x00, 0x52, 0x58, 0xb0, 0x00, 0x4b, 0xb0,
    0x0a, 0x50, 0x58, 0x21, 0xb0, 0x0c, 0x43, 0x1b, 0x4b, 0xb0, 0x1e, 0x50, 0x58, 0x21, 0xb0, 0x1e,
    0x4b, 0x61, 0xb8, 0x10, 0x00, 0x63, 0xb0, 0x0c, 0x43, 0x63, 0xb8, 0x05, 0x00, 0x62, 0x59, 0x59,
    0x64, 0x61, 0x59, 0xb0, 0x01, 0x2b, 0x59, 0x59, 0x23, 0xb0, 0x00, 0x50, 0x58, 0x65, 0x59, 0x59,
    0x20, 0x64, 0xb0, 0x16, 0x43, 0x23, 0x42, 0x59, 0x2d, 0xb0, 0x05, 0x2c, 0x20, 0x45, 0x20, 0xb0,
    0x04, 0x25, 0x61, 0x64, 0x20, 0xb0, 0x07, 0x43, 0x50, 0x58, 0xb0, 0x07, 0x23, 0x42, 0xb0, 0x08,
    0x23, 0x42, 0x1b, 0x21, 0x21, 0x59, 0xb0, 0x01, 0x60, 0x2d, 0xb0, 0x06, 0x2c, 0x23, 0x21, 0x23,
    0x21, 0xb0, 0x03, 0x2b, 0x20, 0x64, 0xb1, 0x07, 0x62, 0x42, 0x20, 0xb0, 0x08, 0x23, 0x42, 0xb0,
    0x06, 0x45, 0x58, 0x1b, 0xb1, 0x01, 0x0d, 0x43, 0x45, 0x63, 0xb1, 0x01, 0x0d, 0x43, 0xb0, 0x07,
    0x60, 0x45, 0x63, 0xb0, 0x05, 0x2a, 0x21, 0x20, 0xb0, 0x08, 0x43, 0x20, 0x8a, 0x20, 0x8a, 0xb0,
    0x01, 0x2b, 0xb1, 0x30, 0x05, 0x25, 0xb0, 0x04, 0x26, 0x51, 0x58, 0x60, 0x50, 0x1b, 0x61, 0x52,
    0x59, 0x58, 0x23, 0x59, 0x21, 0x59, 0x20, 0xb0, 0x40, 0x53, 0x58, 0xb0, 0x01, 0x2b, 0x1b, 0x21,
    0xb0, 0x40, 0x59, 0x23, 0xb0, 0x00, 0x50, 0x58, 0x65, 0x59, 0x2d, 0xb0, 0x07, 0x2c, 0xb0, 0x09,
    0x43, 0x2b, 0xb2, 0x00, 0x02, 0x00, 0x43, 0x60, 0x42, 0x2d, 0xb0, 0x08, 0x2c, 0xb0, 0x09, 0x23,
    0x42, 0x23, 0x20, 0xb0, 0x00, 0x23, 0x42, 0x61, 0xb0, 0x02, 0x62, 0x66, 0xb0, 0x01, 0x63, 0xb0,
    0x01, 0x60, 0xb0, 0x07, 0x2a, 0x2d, 0xb0, 0x09, 0x2c, 0x20, 0x20, 0x45, 0x20, 0xb0, 0x0e, 0x43,
    0x63, 0xb8, 0x04, 0x00, 0x62, 0x20, 0xb0, 0x00, 0x50, 0x58, 0xb0, 0x40, 0x60, 0x59, 0x66, 0xb0,
    0x01, 0x63, 0x60, 0x44, 0xb0, 0x01, 0x60, 0x2d, 0xb0, 0x0a, 0x2c, 0xb2, 0x09, 0x0e, 0x00, 0x43,
    0x45, 0x42, 0x2a, 0x21, 0xb2, 0x00, 0x01, 0x00, 0x43, 0x60, 0x42, 0x2d, 0xb0, 0x0b, 0x2c, 0xb0,
    0x00, 0x43, 0x23, 0x44, 0xb2, 0x00, 0x01, 0x00, 0x43, 0x60, 0x42, 0x2d, 0xb0, 0x0c, 0x2c, 0x20,
    0x20, 0x45, 0x20, 0xb0, 0x01, 0x2b, 0x23, 0xb0, 0x00, 0x43, 0xb0, 0x04, 0x25, 0x60, 0x20, 0x45,
    0x8a, 0x23, 0x61, 0x20, 0x64, 0x20, 0xb0, 0x20, 0x50, 0x58, 0x21, 0xb0, 0x00, 0x1b, 0xb0, 0x30,
    0x50, 0x58, 0xb0, 0x20, 0x1b, 0xb0, 0x40, 0x59, 0x59, 0x23, 0xb0, 0x00, 0x50, 0x58, 0x65, 0x59,
    0xb0, 0x03, 0x25, 0x23, 0x61, 0x44, 0x44, 0xb0, 0x01, 0x60, 0x2d, 0xb0, 0x0d, 0x2c, 0x20, 0x20,
    0x45, 0x20, 0xb0, 0x01, 0x2b, 0x23, 0xb0, 0x00, 0x43, 0xb0, 0x04, 0x25, 0x60, 0x20, 0x45, 0x8a,
    0x23, 0x61, 0x20, 0x64, 0xb0, 0x24, 0x50, 0x58, 0xb0, 0x00, 0x1b, 0xb0, 0x40, 0x59, 0x23, 0xb0,
    0x00, 0x50, 0x58, 0x65, 0x59, 0xb0, 0x03, 0x25, 0x23, 0x61, 0x44, 0x44, 0xb0, 0x01, 0x60, 0x2d,
    0xb0, 0x0e, 0x2c, 0x20, 0xb0, 0x00, 0x23, 0x42, 0xb3, 0x0d, 0x0c, 0x00, 0x03, 0x45, 0x50, 0x58,
    0x21, 0x1b, 0x23, 0x21, 0x59, 0x2a, 0x21, 0x2d, 0xb0, 0x0f, 0x2c, 0xb1, 0x02, 0x02, 0x45, 0xb0,
    0x64, 0x61, 0x44, 0x2d, 0xb0, 0x10, 0x2c, 0xb0, 0x01, 0x60, 0x20, 0x20, 0xb0, 0x0f, 0x43, 0x4a,
    0xb0, 0x00, 0x50, 0x58, 0x20, 0xb0, 0x0f, 0x23, 0x42, 0x59, 0xb0, 0x10, 0x43, 0x4a, 0xb0, 0x00,
    0x52, 0x58, 0x20, 0xb0, 0x10, 0x23, 0x42, 0x59, 0x2d, 0xb0, 0x11, 0x2c, 0x20, 0xb0, 0x10, 0x62,
    0x66, 0xb0, 0x01, 0x63, 0x20, 0xb8, 0x04, 0x00, 0x63, 0x8a, 0x23, 0x61, 0xb0, 0x11, 0x43, 0x60,
    0x20, 0x8a, 0x60, 0x20, 0xb0, 0x11, 0x23, 0x42, 0x23, 0x2d, 0xb0, 0x12, 0x2c, 0x4b, 0x54, 0x58,
    0xb1, 0x04, 0x64, 0x44, 0x59, 0x24, 0xb0, 0x0d, 0x65, 0x23, 0x78, 0x2d, 0xb0, 0x13, 0x2c, 0x4b,
    0x51, 0x58, 0x4b, 0x53, 0x58, 0xb1, 0x04, 0x64, 0x44, 0x59, 0x1b, 0x21, 0x59, 0x24, 0xb0, 0x13,
    0x65, 0x23, 0x78, 0x2d, 0xb0, 0x14, 0x2c, 0xb1, 0x00, 0x12, 0x43, 0x55, 0x58, 0xb1, 0x12, 0x12,
    0x43, 0xb0, 0x01, 0x61, 0x42, 0xb0, 0x11, 0x2b, 0x59, 0xb0, 0x00, 0x43, 0xb0, 0x02, 0x25, 0x42,
    0xb1, 0x0f, 0x02, 0x25, 0x42, 0xb1, 0x10, 0x02, 0x25, 0x42, 0xb0, 0x01, 0x16, 0x23, 0x20, 0xb0,
    0x03, 0x25, 0x50, 0x58, 0xb1, 0x01, 0x00, 0x43, 0x60, 0xb0, 0x04, 0x25, 0x42, 0x8a, 0x8a, 0x20,
    0x8a, 0x23, 0x61, 0xb0, 0x10, 0x2a, 0x21, 0x23, 0xb0, 0x01, 0x61, 0x20, 0x8a, 0x23, 0x61, 0xb0,
    0x10, 0x2a, 0x21, 0x1b, 0xb1, 0x01, 0x00, 0x43, 0x60, 0xb0, 0x02, 0x25, 0x42, 0xb0, 0x02, 0x25,
    0x61, 0xb0, 0x10, 0x2a, 0x21, 0x59, 0xb0, 0x0f, 0x43, 0x47, 0xb0, 0x10, 0x43, 0x47, 0x60, 0xb0,
    0x02, 0x62, 0x20, 0xb0, 0x00, 0x50, 0x58, 0xb0, 0x40, 0x60, 0x59, 0x66, 0xb0, 0x01, 0x63, 0x20,
    0xb0, 0x0e, 0x43, 0x63, 0xb8, 0x04, 0x00, 0x62, 0x20, 0xb0, 0x00, 0x50, 0x58, 0xb0, 0x40, 0x60,
    0x59, 0x66, 0xb0, 0x01, 0x63, 0x60, 0xb1, 0x00, 0x00, 0x13, 0x23, 0x44, 0xb0, 0x01, 0x43, 0xb0,
    0x00, 0x3e, 0xb2, 0x01, 0x01, 0x01, 0x43, 0x60, 0x42, 0x2d, 0xb0, 0x15, 0x2c, 0x00, 0xb1, 0x00,
    0x02, 0x45, 0x54, 0x58, 0xb0, 0x12, 0x23, 0x42, 0x20, 0x45, 0xb0, 0x0e, 0x23, 0x42, 0xb0, 0x0d,
    0x23, 0xb0, 0x07, 0x60, 0x42, 0x20, 0xb0, 0x14, 0x23, 0x42, 0x20, 0x60, 0xb0, 0x01, 0x61, 0xb7,
    0x18, 0x18, 0x01, 0x00, 0x11, 0x00, 0x13, 0x00, 0x42, 0x42, 0x42, 0x8a, 0x60, 0x20, 0xb0, 0x14,
    0x43, 0x60, 0xb0, 0x14, 0x23, 0x42, 0xb1, 0x14, 0x08, 0x2b, 0xb0, 0x8b, 0x2b, 0x1b, 0x22, 0x59,
    0x2d, 0xb0, 0x16, 0x2c, 0xb1, 0x00, 0x15, 0x2b, 0x2d, 0xb0, 0x17, 0x2c, 0xb1, 0x01, 0x15, 0x2b,
    0x2d, 0xb0, 0x18, 0x2c, 0xb1, 0x02, 0x15, 0x2b, 0x2d, 0xb0, 0x19, 0x2c, 0xb1, 0x03, 0x15, 0x2b,
    0x2d, 0xb0, 0x1a, 0x2c, 0xb1, 0x04, 0x15, 0x2b, 0x2d, 0xb0, 0x1b, 0x2c, 0xb1, 0x05, 0x15, 0x2b,
    0x2d, 0xb0, 0x1c, 0x2c, 0xb1, 0x06, 0x15, 0x2b, 0x2d, 0xb0, 0x1d, 0x2c, 0xb1, 0x07, 0x15, 0x2b,
    0x2d, 0xb0, 0x1e, 0x2c, 0xb1, 0x08, 0x15, 0x2b, 0x2d, 0xb0, 0x1f, 0x2c, 0xb1, 0x09, 0x15, 0x2b,
    0x2d, 0xb0, 0x2b, 0x2c, 0x23, 0x20, 0xb0, 0x10, 0x62, 0x66, 0xb0, 0x01, 0x63, 0xb0, 0x06, 0x60,
    0x4b, 0x54, 0x58, 0x23, 0x20, 0x2e, 0xb0, 0x01, 0x5d, 0x1b, 0x21, 0x21, 0x59, 0x2d, 0xb0, 0x2c,
    0x2c, 0x23, 0x20, 0xb0, 0x10, 0x62, 0x66, 0xb0, 0x01, 0x63, 0xb0, 0x16, 0x60, 0x4b, 0x54, 0x58,
    0x23, 0x20, 0x2e, 0xb0, 0x01, 0x71, 0x1b, 0x21, 0x21, 0x59, 0x2d, 0xb0, 0x2d, 0x2c, 0x23, 0x20,
    0xb0, 0x10, 0x62, 0x66, 0xb0, 0x01, 0x63, 0xb0, 0x26, 0x60, 0x4b, 0x54, 0x58, 0x23, 0x20, 0x2e,
    0xb0, 0x01, 0x72, 0x1b, 0x21, 0x21, 0x59, 0x2d, 0xb0, 0x20, 0x2c, 0x00, 0xb0, 0x0f, 0x2b, 0xb1,
    0x00, 0x02, 0x45, 0x54, 0x58, 0xb0, 0x12, 0x23, 0x42, 0x20, 0x45, 0xb0, 0x0e, 0x23, 0x42, 0xb0,
    0x0d, 0x23, 0xb0, 0x07, 0x60, 0x42, 0x20, 0x60, 0xb0, 0x01, 0x61, 0xb5, 0x18, 0x18, 0x01, 0x00,
    0x11, 0x00, 0x42, 0x42, 0x8a, 0x60, 0xb1, 0x14, 0x08, 0x2b, 0xb0, 0x8b, 0x2b, 0x1b, 0x22, 0x59,
    0x2d, 0xb0, 0x21, 0x2c, 0xb1, 0x00, 0x20, 0x2b, 0x2d, 0xb0, 0x22, 0x2c, 0xb1, 0x01, 0x20, 0x2b,
    0x2d, 0xb0, 0x23, 0x2c, 0xb1, 0x02, 0x20, 0x2b, 0x2d, 0xb0, 0x24, 0x2c, 0xb1, 0x03, 0x20, 0x2b,
    0x2d, 0xb0, 0x25, 0x2c, 0xb1, 0x04, 0x20, 0x2b, 0x2d, 0xb0, 0x26, 0x2c, 0xb1, 0x05, 0x20, 0x2b,
    0x2d, 0xb0, 0x27, 0x2c, 0xb1, 0x06, 0x20, 0x2b, 0x2d, 0xb0, 0x28, 0x2c, 0xb1, 0x07, 0x20, 0x2b,
    0x2d, 0xb0, 0x29, 0x2c, 0xb1, 0x08, 0x20, 0x2b, 0x2d, 0xb0, 0x2a, 0x2c, 0xb1, 0x09, 0x20, 0x2b,
    0x2d, 0xb0, 0x2e, 0x2c, 0x20, 0x3c, 0xb0, 0x01, 0x60, 0x2d, 0xb0, 0x2f, 0x2c, 0x20, 0x60, 0xb0,
    0x18, 0x60, 0x20, 0x43, 0x23, 0xb0, 0x01, 0x60, 0x43, 0xb0, 0x02, 0x25, 0x61, 0xb0, 0x01, 0x60,
    0xb0, 0x2e, 0x2a, 0x21, 0x2d, 0xb0, 0x30, 0x2c, 0xb0, 0x2f, 0x2b, 0xb0, 0x2f, 0x2a, 0x2d, 0xb0,
    0x31, 0x2c, 0x20, 0x20, 0x47, 0x20, 0x20, 0xb0, 0x0e, 0x43, 0x63, 0xb8, 0x04, 0x00, 0x62, 0x20,
    0xb0, 0x00, 0x50, 0x58, 0xb0, 0x40, 0x60, 0x59, 0x66, 0xb0, 0x01, 0x63, 0x60, 0x23, 0x61, 0x38,
    0x23, 0x20, 0x8a, 0x55, 0x58, 0x20, 0x47, 0x20, 0x20, 0xb0, 0x0e, 0x43, 0x63, 0xb8, 0x04, 0x00,
    0x62, 0x20, 0xb0, 0x00, 0x50, 0x58, 0xb0, 0x40, 0x60, 0x59, 0x66, 0xb0, 0x01, 0x63, 0x60, 0x23,
    0x61, 0x38, 0x1b, 0x21, 0x59, 0x2d, 0xb0, 0x32, 0x2c, 0x00, 0xb1, 0x00, 0x02, 0x45, 0x54, 0x58,
    0xb1, 0x0e, 0x06, 0x45, 0x42, 0xb0, 0x01, 0x16, 0xb0, 0x31, 0x2a, 0xb1, 0x05, 0x01, 0x15, 0x45,
    0x58, 0x30, 0x59, 0x1b, 0x22, 0x59, 0x2d, 0xb0, 0x33, 0x2c, 0x00, 0xb0, 0x0f, 0x2b, 0xb1, 0x00,
    0x02, 0x45, 0x54, 0x58, 0xb1, 0x0e, 0x06, 0x45, 0x42, 0xb0, 0x01, 0x16, 0xb0, 0x31, 0x2a, 0xb1,
    0x05, 0x01, 0x15, 0x45, 0x58, 0x30, 0x59, 0x1b, 0x22, 0x59, 0x2d, 0xb0, 0x34, 0x2c, 0x20, 0x35,
    0xb0, 0x01, 0x60, 0x2d, 0xb0, 0x35, 0x2c, 0x00, 0xb1, 0x0e, 0x06, 0x45, 0x42, 0xb0, 0x01, 0x45,
    0x63, 0xb8, 0x04, 0x00, 0x62, 0x20, 0xb0, 0x00, 0x50, 0x58, 0xb0, 0x40, 0x60, 0x59, 0x66, 0xb0,
    0x01, 0x63, 0xb0, 0x01, 0x2b, 0xb0, 0x0e, 0x43, 0x63, 0xb8, 0x04, 0x00, 0x62, 0x20, 0xb0, 0x00,
    0x50, 0x58, 0xb0, 0x40, 0x60, 0x59, 0x66, 0xb0, 0x01, 0x63, 0xb0, 0x01, 0x2b, 0xb0, 0x00, 0x16,
    0xb4, 0x00, 0x00, 0x00, 0x00, 0x00, 0x44, 0x3e, 0x23, 0x38, 0xb1, 0x34, 0x01, 0x15, 0x2a, 0x21,
    0x2d, 0xb0, 0x36, 0x2c, 0x20, 0x3c, 0x20, 0x47, 0x20, 0xb0, 0x0e, 0x43, 0x63, 0xb8, 0x04, 0x00,
    0x62, 0x20, 0xb0, 0x00, 0x50, 0x58, 0xb0, 0x40, 0x60, 0x59, 0x66, 0xb0, 0x01, 0x63, 0x60, 0xb0,
    0x00, 0x43, 0x61, 0x38, 0x2d, 0xb0, 0x37, 0x2c, 0x2e, 0x17, 0x3c, 0x2d, 0xb0, 0x38, 0x2c, 0x20,
    0x3c, 0x20, 0x47, 0x20, 0xb0, 0x0e, 0x43, 0x63, 0xb8, 0x04, 0x00, 0x62, 0x20, 0xb0, 0x00, 0x50,
    0x58, 0xb0, 0x40, 0x60, 0x59, 0x66, 0xb0, 0x01, 0x63, 0x60, 0xb0, 0x00, 0x43, 0x61, 0xb0, 0x01,
    0x43, 0x63, 0x38, 0x2d, 0xb0, 0x39, 0x2c, 0xb1, 0x02, 0x00, 0x16, 0x25, 0x20, 0x2e, 0x20, 0x47,
    0xb0, 0x00, 0x23, 0x42, 0xb0, 0x02, 0x25, 0x49, 0x8a, 0x8a, 0x47, 0x23, 0x47, 0x23, 0x61, 0x20,
    0x58, 0x62, 0x1b, 0x21, 0x59, 0xb0, 0x01, 0x23, 0x42, 0xb2, 0x38, 0x01, 0x01, 0x15, 0x14, 0x2a,
    0x2d, 0xb0, 0x3a, 0x2c, 0xb0, 0x00, 0x16, 0xb0, 0x17, 0x23, 0x42, 0xb0, 0x04, 0x25, 0xb0, 0x04,
    0x25, 0x47, 0x23, 0x47, 0x23, 0x61, 0xb1, 0x0c, 0x00, 0x42, 0xb0, 0x0b, 0x43, 0x2b, 0x65, 0x8a,
    0x2e, 0x23, 0x20, 0x20, 0x3c, 0x8a, 0x38, 0x2d, 0xb0, 0x3b, 0x2c, 0xb0, 0x00, 0x16, 0xb0, 0x17,
    0x23, 0x42, 0xb0, 0x04, 0x25, 0xb0, 0x04, 0x25, 0x20, 0x2e, 0x47, 0x23, 0x47, 0x23, 0x61, 0x20,
    0xb0, 0x06, 0x23, 0x42, 0xb1, 0x0c, 0x00, 0x42, 0xb0, 0x0b, 0x43, 0x2b, 0x20, 0xb0, 0x60, 0x50,
    0x58, 0x20, 0xb0, 0x40, 0x51, 0x58, 0xb3, 0x04, 0x20, 0x05, 0x20, 0x1b, 0xb3, 0x04, 0x26, 0x05,
    0x1a, 0x59, 0x42, 0x42, 0x23, 0x20, 0xb0, 0x0a, 0x43, 0x20, 0x8a, 0x23, 0x47, 0x23, 0x47, 0x23,
    0x61, 0x23, 0x46, 0x60, 0xb0, 0x06, 0x43, 0xb0, 0x02, 0x62, 0x20, 0xb0, 0x00, 0x50, 0x58, 0xb0,
    0x40, 0x60, 0x59, 0x66, 0xb0, 0x01, 0x63, 0x60, 0x20, 0xb0, 0x01, 0x2b, 0x20, 0x8a, 0x8a, 0x61,
    0x20, 0xb0, 0x04, 0x43, 0x60, 0x64, 0x23, 0xb0, 0x05, 0x43, 0x61, 0x64, 0x50, 0x58, 0xb0, 0x04,
    0x43, 0x61, 0x1b, 0xb0, 0x05, 0x43, 0x60, 0x59, 0xb0, 0x03, 0x25, 0xb0, 0x02, 0x62, 0x20, 0xb0,
    0x00, 0x50, 0x58, 0xb0, 0x40, 0x60, 0x59, 0x66, 0xb0, 0x01, 0x63, 0x61, 0x23, 0x20, 0x20, 0xb0,
    0x04, 0x26, 0x23, 0x46, 0x61, 0x38, 0x1b, 0x23, 0xb0, 0x0a, 0x43, 0x46, 0xb0, 0x02, 0x25, 0xb0,
    0x0a, 0x43, 0x47, 0x23, 0x47, 0x23, 0x61, 0x60, 0x20, 0xb0, 0x06, 0x43, 0xb0, 0x02, 0x62, 0x20,
    0xb0, 0x00, 0x50, 0x58, 0xb0, 0x40, 0x60, 0x59, 0x66, 0xb0, 0x01, 0x63, 0x60, 0x23, 0x20, 0xb0,
    0x01, 0x2b, 0x23, 0xb0, 0x06, 0x43, 0x60, 0xb0, 0x01, 0x2b, 0xb0, 0x05, 0x25, 0x61, 0xb0, 0x05,
    0x25, 0xb0, 0x02, 0x62, 0x20, 0xb0, 0x00, 0x50, 0x58, 0xb0, 0x40, 0x60, 0x59, 0x66, 0xb0, 0x01,
    0x63, 0xb0, 0x04, 0x26, 0x61, 0x20, 0xb0, 0x04, 0x25, 0x60, 0x64, 0x23, 0xb0, 0x03, 0x25, 0x60,
    0x64, 0x50, 0x58, 0x21, 0x1b, 0x23, 0x21, 0x59, 0x23, 0x20, 0x20, 0xb0, 0x04, 0x26, 0x23, 0x46,
    0x61, 0x38, 0x59, 0x2d, 0xb0, 0x3c, 0x2c, 0xb0, 0x00, 0x16, 0xb0, 0x17, 0x23, 0x42, 0x20, 0x20,
    0x20, 0xb0, 0x05, 0x26, 0x20, 0x2e, 0x47, 0x23, 0x47, 0x23, 0x61, 0x23, 0x3c, 0x38, 0x2d, 0xb0,
    0x3d, 0x2c, 0xb0, 0x00, 0x16, 0xb0, 0x17, 0x23, 0x42, 0x20, 0xb0, 0x0a, 0x23, 0x42, 0x20, 0x20,
    0x20, 0x46, 0x23, 0x47, 0xb0, 0x01, 0x2b, 0x23, 0x61, 0x38, 0x2d, 0xb0, 0x3e, 0x2c, 0xb0, 0x00,
    0x16, 0xb0, 0x17, 0x23, 0x42, 0xb0, 0x03, 0x25, 0xb0, 0x02, 0x25, 0x47, 0x23, 0x47, 0x23, 0x61,
    0xb0, 0x00, 0x54, 0x58, 0x2e, 0x20, 0x3c, 0x23, 0x21, 0x1b, 0xb0, 0x02, 0x25, 0xb0, 0x02, 0x25,
    0x47, 0x23, 0x47, 0x23, 0x61, 0x20, 0xb0, 0x05, 0x25, 0xb0, 0x04, 0x25, 0x47, 0x23, 0x47, 0x23,
    0x61, 0xb0, 0x06, 0x25, 0xb0, 0x05, 0x25, 0x49, 0xb0, 0x02, 0x25, 0x61, 0xb9, 0x08, 0x00, 0x08,
    0x00, 0x63, 0x63, 0x23, 0x20, 0x58, 0x62, 0x1b, 0x21, 0x59, 0x63, 0xb8, 0x04, 0x00, 0x62, 0x20,
    0xb0, 0x00, 0x50, 0x58, 0xb0, 0x40, 0x60, 0x59, 0x66, 0xb0, 0x01, 0x63, 0x60, 0x23, 0x2e, 0x23,
    0x20, 0x20, 0x3c, 0x8a, 0x38, 0x23, 0x21, 0x59, 0x2d, 0xb0, 0x3f, 0x2c, 0xb0, 0x00, 0x16, 0xb0,
    0x17, 0x23, 0x42, 0x20, 0xb0, 0x0a, 0x43, 0x20, 0x2e, 0x47, 0x23, 0x47, 0x23, 0x61, 0x20, 0x60,
    0xb0, 0x20, 0x60, 0x66, 0xb0, 0x02, 0x62, 0x20, 0xb0, 0x00, 0x50, 0x58, 0xb0, 0x40, 0x60, 0x59,
    0x66, 0xb0, 0x01, 0x63, 0x23, 0x20, 0x20, 0x3c, 0x8a, 0x38, 0x2d, 0xb0, 0x40, 0x2c, 0x23, 0x20,
    0x2e, 0x46, 0xb0, 0x02, 0x25, 0x46, 0xb0, 0x17, 0x43, 0x58, 0x50, 0x1b, 0x52, 0x59, 0x58, 0x20,
    0x3c, 0x59, 0x2e, 0xb1, 0x30, 0x01, 0x14, 0x2b, 0x2d, 0xb0, 0x41, 0x2c, 0x23, 0x20, 0x2e, 0x46,
    0xb0, 0x02, 0x25, 0x46, 0xb0, 0x17, 0x43, 0x58, 0x52, 0x1b, 0x50, 0x59, 0x58, 0x20, 0x3c, 0x59,
    0x2e, 0xb1, 0x30, 0x01, 0x14, 0x2b, 0x2d, 0xb0, 0x42, 0x2c, 0x23, 0x20, 0x2e, 0x46, 0xb0, 0x02,
    0x25, 0x46, 0xb0, 0x17, 0x43, 0x58, 0x50, 0x1b, 0x52, 0x59, 0x58, 0x20, 0x3c, 0x59, 0x23, 0x20,
    0x2e, 0x46, 0xb0, 0x02, 0x25, 0x46, 0xb0, 0x17, 0x43, 0x58, 0x52, 0x1b, 0x50, 0x59, 0x58, 0x20,
    0x3c, 0x59, 0x2e, 0xb1, 0x30, 0x01, 0x14, 0x2b, 0x2d, 0xb0, 0x43, 0x2c, 0xb0, 0x3a, 0x2b, 0x23,
    0x20, 0x2e, 0x46, 0xb0, 0x02, 0x25, 0x46, 0xb0, 0x17, 0x43, 0x58, 0x50, 0x1b, 0x52, 0x59, 0x58,
    0x20, 0x3c, 0x59, 0x2e, 0xb1, 0x30, 0x01, 0x14, 0x2b, 0x2d, 0xb0, 0x44, 0x2c, 0xb0, 0x3b, 0x2b,
    0x8a, 0x20, 0x20, 0x3c, 0xb0, 0x06, 0x23, 0x42, 0x8a, 0x38, 0x23, 0x20, 0x2e, 0x46, 0xb0, 0x02,
    0x25, 0x46, 0xb0, 0x17, 0x43, 0x58, 0x50, 0x1b, 0x52, 0x59, 0x58, 0x20, 0x3c, 0x59, 0x2e, 0xb1,
    0x30, 0x01, 0x14, 0x2b, 0xb0, 0x06, 0x43, 0x2e, 0xb0, 0x30, 0x2b, 0x2d, 0xb0, 0x45, 0x2c, 0xb0,
    0x00, 0x16, 0xb0, 0x04, 0x25, 0xb0, 0x04, 0x26, 0x20, 0x20, 0x20, 0x46, 0x23, 0x47, 0x61, 0xb0,
    0x0c, 0x23, 0x42, 0x2e, 0x47, 0x23, 0x47, 0x23, 0x61, 0xb0, 0x0b, 0x43, 0x2b, 0x23, 0x20, 0x3c,
    0x20, 0x2e, 0x23, 0x38, 0xb1, 0x30, 0x01, 0x14, 0x2b, 0x2d, 0xb0, 0x46, 0x2c, 0xb1, 0x0a, 0x04,
    0x25, 0x42, 0xb0, 0x00, 0x16, 0xb0, 0x04, 0x25, 0xb0, 0x04, 0x25, 0x20, 0x2e, 0x47, 0x23, 0x47,
    0x23, 0x61, 0x20, 0xb0, 0x06, 0x23, 0x42, 0xb1, 0x0c, 0x00, 0x42, 0xb0, 0x0b, 0x43, 0x2b, 0x20,
    0xb0, 0x60, 0x50, 0x58, 0x20, 0xb0, 0x40, 0x51, 0x58, 0xb3, 0x04, 0x20, 0x05, 0x20, 0x1b, 0xb3,
    0x04, 0x26, 0x05, 0x1a, 0x59, 0x42, 0x42, 0x23, 0x20, 0x47, 0xb0, 0x06, 0x43, 0xb0, 0x02, 0x62,
    0x20, 0xb0, 0x00, 0x50, 0x58, 0xb0, 0x40, 0x60, 0x59, 0x66, 0xb0, 0x01, 0x63, 0x60, 0x20, 0xb0,
    0x01, 0x2b, 0x20, 0x8a, 0x8a, 0x61, 0x20, 0xb0, 0x04, 0x43, 0x60, 0x64, 0x23, 0xb0, 0x05, 0x43,
    0x61, 0x64, 0x50, 0x58, 0xb0, 0x04, 0x43, 0x61, 0x1b, 0xb0, 0x05, 0x43, 0x60, 0x59, 0xb0, 0x03,
    0x25, 0xb0, 0x02, 0x62, 0x20, 0xb0, 0x00, 0x50, 0x58, 0xb0, 0x40, 0x60, 0x59, 0x66, 0xb0, 0x01,
    0x63, 0x61, 0xb0, 0x02, 0x25, 0x46, 0x61, 0x38, 0x23, 0x20, 0x3c, 0x23, 0x38, 0x1b, 0x21, 0x20,
    0x20, 0x46, 0x23, 0x47, 0xb0, 0x01, 0x2b, 0x23, 0x61, 0x38, 0x21, 0x59, 0xb1, 0x30, 0x01, 0x14,
    0x2b, 0x2d, 0xb0, 0x47, 0x2c, 0xb1, 0x00, 0x3a, 0x2b, 0x2e, 0xb1, 0x30, 0x01, 0x14, 0x2b, 0x2d,
    0xb0, 0x48, 0x2c, 0xb1, 0x00, 0x3b, 0x2b, 0x21, 0x23, 0x20, 0x20, 0x3c, 0xb0, 0x06, 0x23, 0x42,
    0x23, 0x38, 0xb1, 0x30, 0x01, 0x14, 0x2b, 0xb0, 0x06, 0x43, 0x2e, 0xb0, 0x30, 0x2b, 0x2d, 0xb0,
    0x49, 0x2c, 0xb0, 0x00, 0x15, 0x20, 0x47, 0xb0, 0x00, 0x23, 0x42, 0xb2, 0x00, 0x01, 0x01, 0x15,
    0x14, 0x13, 0x2e, 0xb0, 0x36, 0x2a, 0x2d, 0xb0, 0x4a, 0x2c, 0xb0, 0x00, 0x15, 0x20, 0x47, 0xb0,
    0x00, 0x23, 0x42, 0xb2, 0x00, 0x01, 0x01, 0x15, 0x14, 0x13, 0x2e, 0xb0, 0x36, 0x2a, 0x2d, 0xb0,
    0x4b, 0x2c, 0xb1, 0x00, 0x01, 0x14, 0x13, 0xb0, 0x37, 0x2a, 0x2d, 0xb0, 0x4c, 0x2c, 0xb0, 0x39,
    0x2a, 0x2d, 0xb0, 0x4d, 0x2c, 0xb0, 0x00, 0x16, 0x45, 0x23, 0x20, 0x2e, 0x20, 0x46, 0x8a, 0x23,
    0x61, 0x38, 0xb1, 0x30, 0x01, 0x14, 0x2b, 0x2d, 0xb0, 0x4e, 0x2c, 0xb0, 0x0a, 0x23, 0x42, 0xb0,
    0x4d, 0x2b, 0x2d, 0xb0, 0x4f, 0x2c, 0xb2, 0x00, 0x00, 0x46, 0x2b, 0x2d, 0xb0, 0x50, 0x2c, 0xb2,
    0x00, 0x01, 0x46, 0x2b, 0x2d, 0xb0, 0x51, 0x2c, 0xb2, 0x01, 0x00, 0x46, 0x2b, 0x2d, 0xb0, 0x52,
    0x2c, 0xb2, 0x01, 0x01, 0x46, 0x2b, 0x2d, 0xb0, 0x53, 0x2c, 0xb2, 0x00, 0x00, 0x47, 0x2b, 0x2d,
    0xb0, 0x54, 0x2c, 0xb2, 0x00, 0x01, 0x47, 0x2b, 0x2d, 0xb0, 0x55, 0x2c, 0xb2, 0x01, 0x00, 0x47,
    0x2b, 0x2d, 0xb0, 0x56, 0x2c, 0xb2, 0x01, 0x01, 0x47, 0x2b, 0x2d, 0xb0, 0x57, 0x2c, 0xb3, 0x00,
    0x00, 0x00, 0x43, 0x2b, 0x2d, 0xb0, 0x58, 0x2c, 0xb3, 0x00, 0x01, 0x00, 0x43, 0x2b, 0x2d, 0xb0,
    0x59, 0x2c, 0xb3, 0x01, 0x00, 0x00, 0x43, 0x2b, 0x2d, 0xb0, 0x5a, 0x2c, 0xb3, 0x01, 0x01, 0x00,
    0x43, 0x2b, 0x2d, 0xb0, 0x5b, 0x2c, 0xb3, 0x00, 0x00, 0x01, 0x43, 0x2b, 0x2d, 0xb0, 0x5c, 0x2c,
    0xb3, 0x00, 0x01, 0x01, 0x43, 0x2b, 0x2d, 0xb0, 0x5d, 0x2c, 0xb3, 0x01, 0x00, 0x01, 0x43, 0x2b,
    0x2d, 0xb0, 0x5e, 0x2c, 0xb3, 0x01, 0x01, 0x01, 0x43, 0x2b, 0x2d, 0xb0, 0x5f, 0x2c, 0xb2, 0x00,
    0x00, 0x45, 0x2b, 0x2d, 0xb0, 0x60, 0x2c, 0xb2, 0x00, 0x01, 0x45, 0x2b, 0x2d, 0xb0, 0x61, 0x2c,
    0xb2, 0x01, 0x00, 0x45, 0x2b, 0x2d, 0xb0, 0x62, 0x2c, 0xb2, 0x01, 0x01, 0x45, 0x2b, 0x2d, 0xb0,
    0x63, 0x2c, 0xb2, 0x00, 0x00, 0x48, 0x2b, 0x2d, 0xb0, 0x64, 0x2c, 0xb2, 0x00, 0x01, 0x48, 0x2b,
    0x2d, 0xb0, 0x65, 0x2c, 0xb2, 0x01, 0x00, 0x48, 0x2b, 0x2d, 0xb0, 0x66, 0x2c, 0xb2, 0x01, 0x01,
    0x48, 0x2b, 0x2d, 0xb0, 0x67, 0x2c, 0xb3, 0x00, 0x00, 0x00, 0x44, 0x2b, 0x2d, 0xb0, 0x68, 0x2c,
    0xb3, 0x00, 0x01, 0x00, 0x44, 0x2b, 0x2d, 0xb0, 0x69, 0x2c, 0xb3, 0x01, 0x00, 0x00, 0x44, 0x2b,
    0x2d, 0xb0, 0x6a, 0x2c, 0xb3, 0x01, 0x01, 0x00, 0x44, 0x2b, 0x2d, 0xb0, 0x6b, 0x2c, 0xb3, 0x00,
    0x00, 0x01, 0x44, 0x2b, 0x2d, 0xb0, 0x6c, 0x2c, 0xb3, 0x00, 0x01, 0x01, 0x44, 0x2b, 0x2d, 0xb0,
    0x6d, 0x2c, 0xb3, 0x01, 0x00, 0x01, 0x44, 0x2b, 0x2d, 0xb0, 0x6e, 0x2c, 0xb3, 0x01, 0x01, 0x01,
    0x44, 0x2b, 0x2d, 0xb0, 0x6f, 0x2c, 0xb1, 0x00, 0x3c, 0x2b, 0x2e, 0xb1, 0x30, 0x01, 0x14, 0x2b,
    0x2d, 0xb0, 0x70, 0x2c, 0xb1, 0x00, 0x3c, 0x2b, 0xb0, 0x40, 0x2b, 0x2d, 0xb0, 0x71, 0x2c, 0xb1,
    0x00, 0x3c, 0x2b, 0xb0, 0x41, 0x2b, 0x2d, 0xb0, 0x72, 0x2c, 0xb0, 0x00, 0x16, 0xb1, 0x00, 0x3c,
    0x2b, 0xb0, 0x42, 0x2b, 0x2d, 0xb0, 0x73, 0x2c, 0xb1, 0x01, 0x3c, 0x2b, 0xb0, 0x40, 0x2b, 0x2d,
    0xb0, 0x74, 0x2c, 0xb1, 0x01, 0x3c, 0x2b, 0xb0, 0x41, 0x2b, 0x2d, 0xb0, 0x75, 0x2c, 0xb0, 0x00,
    0x16, 0xb1, 0x01, 0x3c, 0x2b, 0xb0, 0x42, 0x2b, 0x2d, 0xb0, 0x76, 0x2c, 0xb1, 0x00, 0x3d, 0x2b,
    0x2e, 0xb1, 0x30, 0x01, 0x14, 0x2b, 0x2d, 0xb0, 0x77, 0x2c, 0xb1, 0x00, 0x3d, 0x2b, 0xb0, 0x40,
    0x2b, 0x2d, 0xb0, 0x78, 0x2c, 0xb1, 0x00, 0x3d, 0x2b, 0xb0, 0x41, 0x2b, 0x2d, 0xb0, 0x79, 0x2c,
    0xb1, 0x00, 0x3d, 0x2b, 0xb0, 0x42, 0x2b, 0x2d, 0xb0, 0x7a, 0x2c, 0xb1, 0x01, 0x3d, 0x2b, 0xb0,
    0x40, 0x2b, 0x2d, 0xb0, 0x7b, 0x2c, 0xb1, 0x01, 0x3d, 0x2b, 0xb0, 0x41, 0x2b, 0x2d, 0xb0, 0x7c,
    0x2c, 0xb1, 0x01, 0x3d, 0x2b, 0xb0, 0x42, 0x2b, 0x2d, 0xb0, 0x7d, 0x2c, 0xb1, 0x00, 0x3e, 0x2b,
    0x2e, 0xb1, 0x30, 0x01, 0x14, 0x2b, 0x2d, 0xb0, 0x7e, 0x2c, 0xb1, 0x00, 0x3e, 0x2b, 0xb0, 0x40,
    0x2b, 0x2d, 0xb0, 0x7f, 0x2c, 0xb1, 0x00, 0x3e, 0x2b, 0xb0, 0x41, 0x2b, 0x2d, 0xb0, 0x80, 0x2c,
    0xb1, 0x00, 0x3e, 0x2b, 0xb0, 0x42, 0x2b, 0x2d, 0xb0, 0x81, 0x2c, 0xb1, 0x01, 0x3e, 0x2b, 0xb0,
    0x40, 0x2b, 0x2d, 0xb0, 0x82, 0x2c, 0xb1, 0x01, 0x3e, 0x2b, 0xb0, 0x41, 0x2b, 0x2d, 0xb0, 0x83,
    0x2c, 0xb1, 0x01, 0x3e, 0x2b, 0xb0, 0x42, 0x2b, 0x2d, 0xb0, 0x84, 0x2c, 0xb1, 0x00, 0x3f, 0x2b,
    0x2e, 0xb1, 0x30, 0x01, 0x14, 0x2b, 0x2d, 0xb0, 0x85, 0x2c, 0xb1, 0x00, 0x3f, 0x2b, 0xb0, 0x40,
    0x2b, 0x2d, 0xb0, 0x86, 0x2c, 0xb1, 0x00, 0x3f, 0x2b, 0xb0, 0x41, 0x2b, 0x2d, 0xb0, 0x87, 0x2c,
    0xb1, 0x00, 0x3f, 0x2b, 0xb0, 0x42, 0x2b, 0x2d, 0xb0, 0x88, 0x2c, 0xb1, 0x01, 0x3f, 0x2b, 0xb0,
    0x40, 0x2b, 0x2d, 0xb0, 0x89, 0x2c, 0xb1, 0x01, 0x3f, 0x2b, 0xb0, 0x41, 0x2b, 0x2d, 0xb0, 0x8a,
    0x2c, 0xb1, 0x01, 0x3f, 0x2b, 0xb0, 0x42, 0x2b, 0x2d, 0xb0, 0x8b, 0x2c, 0xb2, 0x0b, 0x00, 0x03,
    0x45, 0x50, 0x58, 0xb0, 0x06, 0x1b, 0xb2, 0x04, 0x02, 0x03, 0x45, 0x58, 0x23, 0x21, 0x1b, 0x21,
    0x59, 0x59, 0x42, 0x2b, 0xb0, 0x08, 0x65, 0xb0, 0x03, 0x24, 0x50, 0x78, 0xb1, 0x05, 0x01, 0x15,
    0x45, 0x58, 0x30, 0x59, 0x2d, 0x00, 0x00, 0x00, 0x00, 0x4b, 0xb8, 0x00, 0xc8, 0x52, 0x58, 0xb1,
    0x01, 0x01, 0x8e, 0x59, 0xb0, 0x01, 0xb9, 0x08, 0x00, 0x08, 0x00, 0x63, 0x70, 0xb1, 0x00, 0x07,
    0x42, 0x40, 0x09, 0x79, 0x69, 0x59, 0x00, 0x3f, 0x00, 0x27, 0x07, 0x00, 0x2a, 0xb1, 0x00, 0x07,
    0x42, 0x40, 0x10, 0x6e, 0x08, 0x5e, 0x08, 0x4e, 0x08, 0x44, 0x05, 0x34, 0x08, 0x2c, 0x04, 0x1e,
    0x07, 0x07, 0x0a, 0x2a, 0xb1, 0x00, 0x07, 0x42, 0x40, 0x10, 0x76, 0x06, 0x66, 0x06, 0x56, 0x06,
    0x49, 0x03, 0x3c, 0x06, 0x30, 0x02, 0x25, 0x05, 0x07, 0x0a, 0x2a, 0xb1, 0x00, 0x0e, 0x42, 0x41,
    0x09, 0x1b, 0xc0, 0x17, 0xc0, 0x13, 0xc0, 0x11, 0x40, 0x0d, 0x40, 0x0b, 0x40, 0x07, 0xc0, 0x00,
    0x07, 0x00, 0x0b, 0x2a, 0xb1, 0x00, 0x15, 0x42, 0x41, 0x09, 0x00, 0x40, 0x00, 0x40, 0x00, 0x40,
    0x00, 0x40, 0x00, 0x40, 0x00, 0x40, 0x00, 0x40, 0x00, 0x07, 0x00, 0x0b, 0x2a, 0xb9, 0x00, 0x03,
    0x00, 0x00, 0x44, 0xb1, 0x24, 0x01, 0x88, 0x51, 0x58, 0xb0, 0x40, 0x88, 0x58, 0xb9, 0x00, 0x03,
    0x00, 0x64, 0x44, 0xb1, 0x28, 0x01, 0x88, 0x51, 0x58, 0xb8, 0x08, 0x00, 0x88, 0x58, 0xb9, 0x00,
    0x03, 0x00, 0x00, 0x44, 0x59, 0x1b, 0xb1, 0x27, 0x01, 0x88, 0x51, 0x58, 0xba, 0x08, 0x80, 0x00,
    0x01, 0x04, 0x40, 0x88, 0x63, 0x54, 0x58, 0xb9, 0x00, 0x03, 0x00, 0x00, 0x44, 0x59, 0x59, 0x59,
    0x59, 0x59, 0x40, 0x10, 0x70, 0x06, 0x60, 0x06, 0x50, 0x06, 0x46, 0x03, 0x36, 0x06, 0x2e, 0x02,
    0x20, 0x05, 0x07, 0x0e, 0x2a, 0xb8, 0x01, 0xff, 0x85, 0xb0, 0x04, 0x8d, 0xb1, 0x02, 0x00, 0x44,
    0xb3, 0x05, 0x64, 0x06, 0x00, 0x44, 0x44, 0x00, 0x00, 0x00, 0x00, 0x00, 0x00, 0x00, 0x00, 0x00,
    0x00, 0x00, 0x00, 0x00, 0x00, 0x00, 0x00, 0x00, 0x00, 0x00, 0x00, 0x00, 0x00, 0x00, 0x00, 0x00,
    0x00, 0x00, 0x00, 0x00, 0x00, 0x00, 0x00, 0x00, 0x00, 0x00, 0x00, 0x00, 0x00, 0x00, 0x00, 0x00,
    0x00, 0x00, 0x00, 0x00, 0x00, 0x00, 0x00, 0x00, 0x00, 0x00, 0x00, 0x00, 0x00, 0x00, 0x00, 0x00,
    0x00, 0xbd, 0x00, 0xbd, 0x00, 0x85, 0x00, 0x85, 0x05, 0x81, 0x00, 0x00, 0x04, 0x3a, 0x00, 0x00,
    0xfe, 0x57, 0x05, 0x96, 0xff, 0xec, 0x04, 0x4e, 0xff, 0xec, 0xfe, 0x57, 0x00, 0x32, 0x00, 0x32,
    0x00, 0x32, 0x00, 0x32, 0x04, 0x52, 0x00, 0x56, 0x04, 0x52, 0x00, 0x56, 0x00, 0xbd, 0x00, 0xbd,
    0x00, 0x85, 0x00, 0x85, 0x05, 0x81, 0x00, 0x00, 0x05, 0xcc, 0x04, 0x3a, 0x00, 0x00, 0xfe, 0x58,
    0x05, 0x96, 0xff, 0xec, 0x05, 0xcc, 0x04, 0x4e, 0xff, 0xec, 0xfe, 0x58, 0x00, 0xb8, 0x00, 0xb8,
    0x00, 0xaa, 0x00, 0xaa, 0x04, 0xcb, 0x00, 0x00, 0xfe, 0x7f, 0x04, 0xcb, 0xff, 0xec, 0xfe, 0x7f,
    0x00, 0xbd, 0x00, 0xbd, 0x00, 0x85, 0x00, 0x85, 0x05, 0x81, 0x00, 0x00, 0x05, 0xcb, 0x04, 0x3a,
    0x00, 0x00, 0xfe, 0x57, 0x05, 0x96, 0xff, 0xec, 0x05, 0xcb, 0x04, 0x4e, 0xff, 0xec, 0xfe, 0x57,
    0x00, 0x80, 0x00, 0x80, 0x00, 0x60, 0x00, 0x60, 0x01, 0xdf, 0xfe, 0x91, 0x03, 0x8d, 0x02, 0x73,
    0xff, 0x78, 0xfe, 0x60, 0x01, 0xeb, 0xfe, 0x85, 0x03, 0x8d, 0x02, 0x80, 0xff, 0x6a, 0xfe, 0x60,
    0x00, 0x80, 0x00, 0x80, 0x00, 0x60, 0x00, 0x60, 0x05, 0xac, 0x02, 0x33, 0x05, 0xff, 0x04, 0xe5,
    0x01, 0xea, 0x00, 0xbe, 0x05, 0xac, 0x02, 0x27, 0x05, 0xff, 0x04, 0xf3, 0x01, 0xdc, 0x00, 0xbe,
    0x00, 0x00, 0x00, 0x07, 0x00, 0x5a, 0x00, 0x03, 0x00, 0x01, 0x04, 0x09, 0x00, 0x00, 0x00, 0x5e,
    0x00, 0x00, 0x00, 0x03, 0x00, 0x01, 0x04, 0x09, 0x00, 0x01, 0x00, 0x0a, 0x00, 0x5e, 0x00, 0x03,
    0x00, 0x01, 0x04, 0x09, 0x00, 0x02, 0x00, 0x0e, 0x00, 0x68, 0x00, 0x03, 0x00, 0x01, 0x04, 0x09,
    0x00, 0x03, 0x00, 0x1e, 0x00, 0x76, 0x00, 0x03, 0x00, 0x01, 0x04, 0x09, 0x00, 0x04, 0x00, 0x1a,
    0x00, 0x94, 0x00, 0x03, 0x00, 0x01, 0x04, 0x09, 0x00, 0x05, 0x00, 0x44, 0x00, 0xae, 0x00, 0x03,
    0x00, 0x01, 0x04, 0x09, 0x00, 0x06, 0x00, 0x0a, 0x00, 0x5e, 0x00, 0x43, 0x00, 0x6f, 0x00, 0x70,
    0x00, 0x79, 0x00, 0x72, 0x00, 0x69, 0x00, 0x67, 0x00, 0x68, 0x00, 0x74, 0x00, 0x20, 0x00, 0x32,
    0x00, 0x30, 0x00, 0x31, 0x00, 0x30, 0x00, 0x20, 0x00, 0x47, 0x00, 0x6f, 0x00, 0x6f, 0x00, 0x67,
    0x00, 0x6c, 0x00, 0x65, 0x00, 0x20, 0x00, 0x49, 0x00, 0x6e, 0x00, 0x63, 0x00, 0x2e, 0x00, 0x20,
    0x00, 0x41, 0x00, 0x6c, 0x00, 0x6c, 0x00, 0x20, 0x00, 0x52, 0x00, 0x69, 0x00, 0x67, 0x00, 0x68,
    0x00, 0x74, 0x00, 0x73, 0x00, 0x20, 0x00, 0x52, 0x00, 0x65, 0x00, 0x73, 0x00, 0x65, 0x00, 0x72,
    0x00, 0x76, 0x00, 0x65, 0x00, 0x64, 0x00, 0x2e, 0x00, 0x41, 0x00, 0x72, 0x00, 0x69, 0x00, 0x6d,
    0x00, 0x6f, 0x00, 0x52, 0x00, 0x65, 0x00, 0x67, 0x00, 0x75, 0x00, 0x6c, 0x00, 0x61, 0x00, 0x72,
    0x00, 0x31, 0x00, 0x2e, 0x00, 0x33, 0x00, 0x33, 0x00, 0x3b, 0x00, 0x47, 0x00, 0x4f, 0x00, 0x4f,
    0x00, 0x47, 0x00, 0x3b, 0x00, 0x41, 0x00, 0x72, 0x00, 0x69, 0x00, 0x6d, 0x00, 0x6f, 0x00, 0x41,
    0x00, 0x72, 0x00, 0x69, 0x00, 0x6d, 0x00, 0x6f, 0x00, 0x20, 0x00, 0x52, 0x00, 0x65, 0x00, 0x67,
    0x00, 0x75, 0x00, 0x6c, 0x00, 0x61, 0x00, 0x72, 0x00, 0x56, 0x00, 0x65, 0x00, 0x72, 0x00, 0x73,
    0x00, 0x69, 0x00, 0x6f, 0x00, 0x6e, 0x00, 0x20, 0x00, 0x31, 0x00, 0x2e, 0x00, 0x33, 0x00, 0x33,
    0x00, 0x3b, 0x00, 0x20, 0x00, 0x74, 0x00, 0x74, 0x00, 0x66, 0x00, 0x61, 0x00, 0x75, 0x00, 0x74,
    0x00, 0x6f, 0x00, 0x68, 0x00, 0x69, 0x00, 0x6e, 0x00, 0x74, 0x00, 0x20, 0x00, 0x28, 0x00, 0x76,
    0x00, 0x31, 0x00, 0x2e, 0x00, 0x38, 0x00, 0x2e, 0x00, 0x32, 0x00, 0x29, 0x00, 0x03, 0x00, 0x00,
    0x00, 0x00, 0x00, 0x00, 0xff, 0x27, 0x00, 0x96, 0x00, 0x00, 0x00, 0x00, 0x00, 0x00, 0x00, 0x00,
    0x00, 0x00, 0x00, 0x00, 0x00, 0x00, 0x00, 0x00, 0x00, 0x00, 0x00, 0x00, 0x00, 0x01, 0x00, 0x01,
    0xff, 0xff, 0x00, 0x0f, 0x00, 0x01, 0x00, 0x00, 0x00, 0x0c, 0x00, 0x00, 0x00, 0x00, 0x00, 0x00,
    0x00, 0x02, 0x00, 0x03, 0x00, 0x00, 0x00, 0x9c, 0x00, 0x01, 0x00, 0x9f, 0x00, 0xad, 0x00, 0x01,
    0x00, 0xb2, 0x00, 0xc3, 0x00, 0x01, 0x00, 0x00, 0x00, 0x01, 0x00, 0x00, 0x00, 0x0a, 0x00, 0x42,
    0x00, 0x5c, 0x00, 0x03, 0x63, 0x79, 0x72, 0x6c, 0x00, 0x14, 0x67, 0x72, 0x65, 0x6b, 0x00, 0x20,
    0x6c, 0x61, 0x74, 0x6e, 0x00, 0x2c, 0x00, 0x04, 0x00, 0x00, 0x00, 0x00, 0xff, 0xff, 0x00, 0x01,
    0x00, 0x00, 0x00, 0x04, 0x00, 0x00, 0x00, 0x00, 0xff, 0xff, 0x00, 0x01, 0x00, 0x01, 0x00, 0x04,
    0x00, 0x00, 0x00, 0x00, 0xff, 0xff, 0x00, 0x01, 0x00, 0x02, 0x00, 0x03, 0x6b, 0x65, 0x72, 0x6e,
    0x00, 0x14, 0x6b, 0x65, 0x72, 0x6e, 0x00, 0x14, 0x6b, 0x65, 0x72, 0x6e, 0x00, 0x14, 0x00, 0x00,
    0x00, 0x01, 0x00, 0x00, 0x00, 0x01, 0x00, 0x04, 0x00, 0x02, 0x00, 0x08, 0x00, 0x01, 0x00, 0x08,
    0x00, 0x01, 0x00, 0x2a, 0x00, 0x04, 0x00, 0x00, 0x00, 0x10, 0x00, 0x4e, 0x00, 0x5c, 0x00, 0x62,
    0x00, 0x84, 0x00, 0x92, 0x00, 0xac, 0x00, 0xbe, 0x00, 0xd0, 0x01, 0x1a, 0x01, 0x50, 0x01, 0x82,
    0x01, 0xc0, 0x01, 0xc6, 0x01, 0xd0, 0x01, 0xc6, 0x01, 0xd0, 0x00, 0x01, 0x00, 0x10, 0x00, 0x01,
    0x00, 0x12, 0x00, 0x22, 0x00, 0x27, 0x00, 0x2d, 0x00, 0x31, 0x00, 0x33, 0x00, 0x35, 0x00, 0x37,
    0x00, 0x38, 0x00, 0x3a, 0x00, 0x47, 0x00, 0x53, 0x00, 0x57, 0x00, 0x58, 0x00, 0x5a, 0x00, 0x03,
    0x00, 0x22, 0xff, 0x8f, 0x00, 0x35, 0xff, 0xdb, 0x00, 0x3a, 0xff, 0xdb, 0x00, 0x01, 0x00, 0x12,
    0xff, 0x68, 0x00, 0x08, 0x00, 0x01, 0xff, 0x8f, 0x00, 0x35, 0xff, 0x68, 0x00, 0x37, 0xff, 0x68,
    0x00, 0x38, 0xff, 0xb4, 0x00, 0x3a, 0xff, 0x68, 0x00, 0x57, 0xff, 0xdb, 0x00, 0x58, 0xff, 0xdb,
    0x00, 0x5a, 0xff, 0xdb, 0x00, 0x03, 0x00, 0x0d, 0xff, 0x1d, 0x00, 0x0f, 0xff, 0x1d, 0x00, 0x22,
    0xff, 0x8f, 0x00, 0x06, 0x00, 0x01, 0xff, 0xb4, 0x00, 0x35, 0xff, 0x68, 0x00, 0x37, 0xff, 0x68,
    0x00, 0x38, 0xff, 0x68, 0x00, 0x3a, 0xff, 0x68, 0x00, 0x5a, 0xff, 0xb4, 0x00, 0x04, 0x00, 0x01,
    0xff, 0xdb, 0x00, 0x0d, 0xfe, 0xf8, 0x00, 0x0f, 0xfe, 0xf8, 0x00, 0x22, 0xff, 0x68, 0x00, 0x04,
    0x00, 0x35, 0xff, 0xdb, 0x00, 0x37, 0xff, 0xdb, 0x00, 0x38, 0xff, 0xdb, 0x00, 0x3a, 0xff, 0xdb,
    0x00, 0x12, 0x00, 0x01, 0xff, 0xdb, 0x00, 0x0d, 0xff, 0x1d, 0x00, 0x0e, 0xff, 0x8f, 0x00, 0x0f,
    0xff, 0x1d, 0x00, 0x1b, 0xff, 0x1d, 0x00, 0x1c, 0xff, 0x1d, 0x00, 0x22, 0xff, 0x68, 0x00, 0x30,
    0xff, 0xdb, 0x00, 0x42, 0xff, 0x1d, 0x00, 0x44, 0xff, 0x1d, 0x00, 0x46, 0xff, 0x1d, 0x00, 0x4a,
    0xff, 0xb4, 0x00, 0x50, 0xff, 0x1d, 0x00, 0x53, 0xff, 0xb4, 0x00, 0x54, 0xff, 0x1d, 0x00, 0x56,
    0xff, 0xb4, 0x00, 0x58, 0xff, 0x8f, 0x00, 0x5a, 0xff, 0x8f, 0x00, 0x0d, 0x00, 0x0d, 0xff, 0x44,
    0x00, 0x0e, 0xff, 0x8f, 0x00, 0x0f, 0xff, 0x44, 0x00, 0x1b, 0xff, 0xb4, 0x00, 0x1c, 0xff, 0xb4,
    0x00, 0x22, 0xff, 0x68, 0x00, 0x42, 0xff, 0x68, 0x00, 0x46, 0xff, 0x8f, 0x00, 0x4a, 0xff, 0xdb,
    0x00, 0x50, 0xff, 0x8f, 0x00, 0x53, 0xff, 0xb4, 0x00, 0x56, 0xff, 0xb4, 0x00, 0x5a, 0xff, 0xb4,
    0x00, 0x0c, 0x00, 0x0d, 0xff, 0x8f, 0x00, 0x0e, 0xff, 0xdb, 0x00, 0x0f, 0xff, 0x8f, 0x00, 0x1b,
    0xff, 0xdb, 0x00, 0x1c, 0xff, 0xdb, 0x00, 0x22, 0xff, 0xb4, 0x00, 0x42, 0xff, 0xb4, 0x00, 0x46,
    0xff, 0xdb, 0x00, 0x50, 0xff, 0xdb, 0x00, 0x53, 0xff, 0xdb, 0x00, 0x56, 0xff, 0xdb, 0x00, 0x5a,
    0xff, 0xee, 0x00, 0x0f, 0x00, 0x01, 0xff, 0xdb, 0x00, 0x0d, 0xfe, 0xf8, 0x00, 0x0e, 0xff, 0x44,
    0x00, 0x0f, 0xfe, 0xf8, 0x00, 0x1b, 0xff, 0x8f, 0x00, 0x1c, 0xff, 0x7b, 0x00, 0x22, 0xff, 0x68,
    0x00, 0x42, 0xff, 0x68, 0x00, 0x46, 0xff, 0x44, 0x00, 0x4a, 0xff, 0xb4, 0x00, 0x50, 0xff, 0x44,
    0x00, 0x51, 0xff, 0x68, 0x00, 0x52, 0xff, 0x44, 0x00, 0x56, 0xff, 0x8f, 0x00, 0x57, 0xff, 0x8f,
    0x00, 0x01, 0x00, 0x47, 0xff, 0xdb, 0x00, 0x02, 0x00, 0x0d, 0xff, 0x8f, 0x00, 0x0f, 0xff, 0x8f,
    0x00, 0x02, 0x00, 0x0d, 0xff, 0x68, 0x00, 0x0f, 0xff, 0x68, 0x00, 0x00, 0x00, 0x01, 0x00, 0x00,
    0x00, 0x0a, 0x00, 0x28, 0x00, 0x2a, 0x00, 0x04, 0x63, 0x79, 0x72, 0x6c, 0x00, 0x1a, 0x67, 0x72,
    0x65, 0x6b, 0x00, 0x1a, 0x68, 0x65, 0x62, 0x72, 0x00, 0x1a, 0x6c, 0x61, 0x74, 0x6e, 0x00, 0x1a,
    0x00, 0x00, 0x00, 0x00, 0x00, 0x00, 0x00, 0x00
};

/* vim: set ts=4 sw=4 et : */
#endif /* Z_NORMAL_TTF_H */
